import pytest

from cy5bps import localp2_geometry, load_hypersurface_geometry


def gw_file_text(t5="7", c2="21", c3="-112", maxdeg=6, rows=None):
    """Assemble a Gromov-Witten input file; rows default to all zeros."""
    lines = ["cy5-gw v1", f"t5={t5} c2={c2} c3={c3} maxdeg={maxdeg}"]
    for d in range(1, maxdeg + 1):
        if rows and d in rows:
            a, b, c = rows[d]
        else:
            a = b = c = "0"
        lines.append(f"{d} {a} {b} {c}")
    return "\n".join(lines) + "\n"


@pytest.fixture
def write_gw_file(tmp_path):
    def _write(text, name="geometry.gw"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write


@pytest.fixture
def zero_geometry(write_gw_file):
    """Compact-ring geometry with all Gromov-Witten inputs zero."""
    path = write_gw_file(gw_file_text(maxdeg=8))
    return load_hypersurface_geometry(path, 8)


# Synthetic compact geometry with simple nonzero base counts, chosen so
# the multiple-cover inversion lands on round tables:
#   1-pointed base counts (2, 3, 5, 7), 2-pointed base counts (1, 1, 1, 1).
SYNTHETIC_ROWS = {
    1: ("2", "1", "1"),
    2: ("7/2", "3/2", "2"),
    3: ("47/9", "4/3", "3"),
    4: ("63/8", "7/4", "4"),
}


@pytest.fixture
def synthetic_geometry(write_gw_file):
    path = write_gw_file(gw_file_text(t5="2", c2="5", c3="7", maxdeg=4, rows=SYNTHETIC_ROWS))
    return load_hypersurface_geometry(path, 4)


@pytest.fixture(scope="session")
def local_geometry_12():
    return localp2_geometry(12)
