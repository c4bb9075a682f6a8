"""Memoized recursion engine for rational-curve configuration counts.

Thirteen count types are computed for a geometry: seven 1-component
counts (plain insertions, cotangent-class decorations up to the third
power, and the Chern number gamma1 of the 2-dimensional family of
embedded rational curves), five 2-component meeting counts (a node
insertion, a node cotangent class, or decorations on the free
component), and the 3-component meeting number.  On a rank-1 curve
cone every class is a positive integer degree, the case tables in the
degree-reducing recursions are exhaustive, and every recursive call
either lowers the total degree or moves from a multi-component count
to strictly smaller 1-component ones, so the recursion terminates.

Three layers of rules drive the computation:

* cotangent-class reduction: trading one power of the decoration for
  an extra divisor insertion, a correction with the divisor multiplied
  in, and a sum over splittings of the carrying component;
* diagonal splitting: a node-matching condition is replaced by the
  Kunneth pairs of the diagonal, with excess-intersection corrections
  (C2 for the node-on-divisor count, C1/C2/C12 for the 3-component
  count) subtracting the shared-component degenerations;
* the Chern integral: the degree-d integral of (2c2 - c1^2) over the
  family of embedded rational curves, which feeds the genus-1
  multiple-cover extraction, expands into the 1-component counts of
  c3, psi*c2 and psi^3 plus a symmetrized node-cotangent sum.

All values are exact rationals and every (kind, degrees) key is
memoized; results extend linearly in each cohomology insertion, so the
cache stores one canonical value per key with unit monomial
insertions.
"""

from __future__ import annotations

import enum
import sys
import threading
from typing import NamedTuple

from .cohomology import CohClass, InsertionDegreeError, RingMismatchError, as_degree, ring_mul
from .geometry import Geometry
from .rational import Rat

__all__ = [
    "Kind",
    "CountKey",
    "MemoStore",
    "Engine",
    "EngineCycleError",
    "MemoConsistencyError",
]


class EngineCycleError(RuntimeError):
    """A count re-entered its own evaluation: the recursion would not terminate."""


class MemoConsistencyError(RuntimeError):
    """Two different values were stored for the same count key."""


class Kind(enum.Enum):
    N1B = "n1B"
    N1C = "n1C"
    N1D = "n1D"
    N1E = "n1E"
    N1F = "n1F"
    N1G = "n1G"
    GAMMA1 = "gamma1"
    N2A = "n2A"
    N2B = "n2B"
    N2C = "n2C"
    N2D = "n2D"
    N2E = "n2E"
    GAMMA2 = "gamma2"
    M3 = "m3"
    CHERN = "chern"


# H-powers of the canonical insertions each kind is memoized with.
_INSERTION_POWERS = {
    Kind.N1B: (2, 2),
    Kind.N1C: (2,),
    Kind.N1D: (1, 2),
    Kind.N1E: (1,),
    Kind.N1F: (2,),
    Kind.N1G: (),
    Kind.GAMMA1: (),
    Kind.N2A: (2,),
    Kind.N2B: (1,),
    Kind.N2C: (),
    Kind.N2D: (1,),
    Kind.N2E: (),
    Kind.GAMMA2: (),
    Kind.M3: (),
    Kind.CHERN: (),
}


class CountKey(NamedTuple):
    kind: Kind
    degrees: tuple[int, ...]
    insertion_powers: tuple[int, ...]


def count_key(kind: Kind, degrees: tuple[int, ...]) -> CountKey:
    return CountKey(kind, degrees, _INSERTION_POWERS[kind])


_MISSING = object()


class MemoStore:
    """Write-once cache of count values with cycle detection.

    Writes are idempotent (re-storing the identical value is a no-op)
    so that concurrent evaluation of distinct top-level degrees may
    race on shared subproblems; a conflicting value raises.  Cycle
    detection is per evaluation stack, i.e. per thread.
    """

    def __init__(self):
        self._values: dict[CountKey, object] = {}
        self._local = threading.local()

    def __len__(self) -> int:
        return len(self._values)

    def __contains__(self, key: CountKey) -> bool:
        return key in self._values

    def get(self, key: CountKey, default=_MISSING):
        return self._values.get(key, default)

    def put(self, key: CountKey, value) -> None:
        existing = self._values.get(key, _MISSING)
        if existing is _MISSING:
            self._values[key] = value
        elif existing != value:
            raise MemoConsistencyError(
                f"conflicting values for {key}: {existing} vs {value}"
            )

    def _pending(self) -> set:
        try:
            return self._local.pending
        except AttributeError:
            self._local.pending = set()
            return self._local.pending

    def enter(self, key: CountKey) -> None:
        pending = self._pending()
        if key in pending:
            raise EngineCycleError(f"count {key} re-entered during its own evaluation")
        pending.add(key)

    def leave(self, key: CountKey) -> None:
        self._pending().discard(key)


class Engine:
    """Demand-driven evaluator of all count types for one geometry.

    Evaluation is pure given (geometry, memo): recomputing any count
    with a fresh store yields the identical rational.  Public methods
    accept homogeneous cohomology insertions of the H-power fixed by
    the count type and raise InsertionDegreeError otherwise (the zero
    class is accepted and yields zero by linearity).
    """

    def __init__(self, geometry: Geometry, memo: MemoStore | None = None):
        self.geometry = geometry
        self.memo = memo if memo is not None else MemoStore()
        # a cold top-level call at degree d nests roughly 4*d Python frames;
        # raise the interpreter limit once so direct high-degree use is safe
        sys.setrecursionlimit(
            max(sys.getrecursionlimit(), 2000 + 30 * geometry.max_degree)
        )
        ring = geometry.ring
        self._H = ring.H(1)
        self._H2 = ring.H(2)
        self._compute = {
            Kind.N1B: self._c_n1B,
            Kind.N1C: self._c_n1C,
            Kind.N1D: self._c_n1D,
            Kind.N1E: self._c_n1E,
            Kind.N1F: self._c_n1F,
            Kind.N1G: self._c_n1G,
            Kind.GAMMA1: self._c_gamma1,
            Kind.N2A: self._c_n2A,
            Kind.N2B: self._c_n2B,
            Kind.N2C: self._c_n2C,
            Kind.N2D: self._c_n2D,
            Kind.N2E: self._c_n2E,
            Kind.GAMMA2: self._c_gamma2,
            Kind.M3: self._c_m3,
            Kind.CHERN: self._c_chern,
        }

    # -- insertion handling ------------------------------------------------

    def _scale(self, mu: CohClass, power: int):
        """Scalar s with mu = s * H^power; 0 for the zero class."""
        if not isinstance(mu, CohClass):
            raise InsertionDegreeError(f"insertion must be a CohClass, got {mu!r}")
        if mu.ring is not self.geometry.ring:
            raise RingMismatchError("insertion belongs to a different ring")
        if mu.is_zero():
            return Rat(0)
        actual = mu.homogeneous_power()
        if actual != power:
            raise InsertionDegreeError(
                f"insertion must be homogeneous of H-power {power}, "
                f"got {'mixed' if actual is None else f'power {actual}'}"
            )
        return mu.coefficients[power]

    def _degrees(self, *betas) -> tuple[int, ...]:
        ds = tuple(as_degree(b) for b in betas)
        total = sum(ds)
        if total > self.geometry.max_degree:
            raise ValueError(
                f"total degree {total} exceeds geometry max_degree "
                f"{self.geometry.max_degree}"
            )
        return ds

    def _value(self, kind: Kind, degrees: tuple[int, ...]):
        key = count_key(kind, degrees)
        cached = self.memo.get(key)
        if cached is not _MISSING:
            return cached
        self.memo.enter(key)
        try:
            value = self._compute[kind](*degrees)
        finally:
            self.memo.leave(key)
        self.memo.put(key, value)
        return value

    # -- public counts -----------------------------------------------------

    def n1B(self, beta, mu1: CohClass, mu2: CohClass):
        """Curves of class beta through two H^4 insertions (base count)."""
        (d,) = self._degrees(beta)
        s = self._scale(mu1, 2) * self._scale(mu2, 2)
        return s * self._value(Kind.N1B, (d,)) if s != 0 else Rat(0)

    def n1C(self, beta, mu: CohClass):
        """1-component count with one cotangent power on an H^4 insertion."""
        (d,) = self._degrees(beta)
        s = self._scale(mu, 2)
        return s * self._value(Kind.N1C, (d,)) if s != 0 else Rat(0)

    def n1D(self, beta, mu1: CohClass, mu2: CohClass):
        """Cotangent power on an H^2 insertion, plus a free H^4 insertion."""
        (d,) = self._degrees(beta)
        s = self._scale(mu1, 1) * self._scale(mu2, 2)
        return s * self._value(Kind.N1D, (d,)) if s != 0 else Rat(0)

    def n1E(self, beta, mu: CohClass):
        """Second cotangent power on an H^2 insertion."""
        (d,) = self._degrees(beta)
        s = self._scale(mu, 1)
        return s * self._value(Kind.N1E, (d,)) if s != 0 else Rat(0)

    def n1F(self, beta, mu: CohClass):
        """Second cotangent power at one point, H^4 insertion at another."""
        (d,) = self._degrees(beta)
        s = self._scale(mu, 2)
        return s * self._value(Kind.N1F, (d,)) if s != 0 else Rat(0)

    def n1G(self, beta):
        """Third cotangent power, no insertions."""
        (d,) = self._degrees(beta)
        return self._value(Kind.N1G, (d,))

    def gamma1(self, beta):
        """Chern number of the 2-dimensional family of beta-curves:
        the integral of c1^2 - c2 of the family."""
        (d,) = self._degrees(beta)
        return self._value(Kind.GAMMA1, (d,))

    def n2A(self, beta1, beta2, mu: CohClass):
        """2-component curves with an H^4 insertion on the second component."""
        d1, d2 = self._degrees(beta1, beta2)
        s = self._scale(mu, 2)
        return s * self._value(Kind.N2A, (d1, d2)) if s != 0 else Rat(0)

    def n2B(self, beta1, beta2, mu: CohClass):
        """2-component curves with the node on an H^2 divisor."""
        d1, d2 = self._degrees(beta1, beta2)
        s = self._scale(mu, 1)
        return s * self._value(Kind.N2B, (d1, d2)) if s != 0 else Rat(0)

    def n2C(self, beta1, beta2):
        """2-component curves with a cotangent class at the node, taken on
        the second-component side."""
        d1, d2 = self._degrees(beta1, beta2)
        return self._value(Kind.N2C, (d1, d2))

    def n2D(self, beta1, beta2, mu: CohClass):
        """2-component curves, cotangent power on an H^2 insertion carried
        by the second component."""
        d1, d2 = self._degrees(beta1, beta2)
        s = self._scale(mu, 1)
        return s * self._value(Kind.N2D, (d1, d2)) if s != 0 else Rat(0)

    def n2E(self, beta1, beta2):
        """2-component curves with a second cotangent power on the second
        component."""
        d1, d2 = self._degrees(beta1, beta2)
        return self._value(Kind.N2E, (d1, d2))

    def gamma2(self, beta1, beta2):
        """Chern-type combination for 2-component configurations; appears in
        the excess corrections of the diagonal-splitting recursions."""
        d1, d2 = self._degrees(beta1, beta2)
        return self._value(Kind.GAMMA2, (d1, d2))

    def correction_C2(self, beta1, beta2, mu: CohClass):
        """Excess correction for the node-on-divisor count."""
        d1, d2 = self._degrees(beta1, beta2)
        s = self._scale(mu, 1)
        return s * self._corr2(d1, d2) if s != 0 else Rat(0)

    def correction_C3(self, beta1, beta2, beta3):
        """The three excess corrections (C1, C2, C12) for the 3-component
        meeting number, with their defining signs included."""
        d1, d2, d3 = self._degrees(beta1, beta2, beta3)
        return self._corr3(d1, d2, d3)

    def m3(self, beta1, beta2, beta3):
        """Chains of three rational curves with consecutive components
        meeting at nodes."""
        d1, d2, d3 = self._degrees(beta1, beta2, beta3)
        return self._value(Kind.M3, (d1, d2, d3))

    def chern_integral(self, beta):
        """Integral of 2c2 - c1^2 over the family of embedded beta-curves:
        the genus-1 multiple-cover weight of the family."""
        (d,) = self._degrees(beta)
        return self._value(Kind.CHERN, (d,))

    # -- canonical computations (unit monomial insertions) ------------------

    def _c_n1B(self, d: int):
        return Rat(self.geometry.base_n2pt(d, self._H2, self._H2))

    def _c_n1C(self, d: int):
        g = self.geometry
        acc = self.n1B(d, self._H2, self._H2)
        acc -= 2 * d * g.base_n1pt(d, ring_mul(self._H, self._H2))
        acc += sum(
            (a * a * self.n2A(a, d - a, self._H2) for a in range(1, d)), Rat(0)
        )
        return acc / Rat(d * d)

    def _c_n1D(self, d: int):
        H, H2 = self._H, self._H2
        acc = d * self.n1B(d, H2, H2) - 2 * d * self.n1B(d, ring_mul(H, H), H2)
        acc += sum(
            (
                (a * (d - a) ** 2 + (d - a) * a * a) * self.n2A(a, d - a, H2)
                for a in range(1, d)
            ),
            Rat(0),
        )
        return acc / Rat(d * d)

    def _c_n1E(self, d: int):
        H = self._H
        acc = self.n1D(d, H, self._H2) - 2 * d * self.n1C(d, ring_mul(H, H))
        acc += sum(
            (
                a * a * (self.n2D(a, d - a, H) + self.n2B(a, d - a, H))
                for a in range(1, d)
            ),
            Rat(0),
        )
        return acc / Rat(d * d)

    def _c_n1F(self, d: int):
        return -sum((self.n2A(a, d - a, self._H2) for a in range(1, d)), Rat(0))

    def _c_n1G(self, d: int):
        acc = self.n1F(d, self._H2) - 2 * d * self.n1E(d, self._H)
        acc += sum(
            (
                a * a * (self.n2E(a, d - a) + self.n2C(a, d - a))
                for a in range(1, d)
            ),
            Rat(0),
        )
        return acc / Rat(d * d)

    def _c_gamma1(self, d: int):
        g = self.geometry
        acc = Rat(1, 2) * (
            g.base_n1pt(d, g.c3)
            + self.n1C(d, g.c2)
            + self.n1G(d)
            + self.n1B(d, g.c2, g.c2)
            + 4 * self.n1F(d, g.c2)
        )
        acc -= sum(
            (
                2 * self.n2E(a, d - a) + Rat(5, 2) * self.n2C(a, d - a)
                for a in range(1, d)
            ),
            Rat(0),
        )
        return acc

    def _c_n2A(self, d1: int, d2: int):
        g = self.geometry
        acc = sum(
            (
                Rat(g.base_n1pt(d1, w)) * g.base_n2pt(d2, ws, self._H2)
                for w, ws in g.diagonal_pairs
            ),
            Rat(0),
        )
        if d2 > d1:
            acc += self.n2A(d1, d2 - d1, self._H2) + self.n2A(d2 - d1, d1, self._H2)
        elif d2 < d1:
            acc += self.n2A(d1 - d2, d2, self._H2)
        else:
            acc += self.n1B(d1, g.c2, self._H2) + 2 * self.n1F(d1, self._H2)
        return acc

    def _c_n2B(self, d1: int, d2: int):
        g = self.geometry
        acc = sum(
            (
                Rat(g.base_n1pt(d1, ring_mul(w, self._H))) * g.base_n1pt(d2, ws)
                for w, ws in g.diagonal_pairs
            ),
            Rat(0),
        )
        acc -= sum(
            (c * self.m3(d1 - c, c, d2 - c) for c in range(1, min(d1, d2))),
            Rat(0),
        )
        return acc - self._corr2(d1, d2)

    def _corr2(self, d1: int, d2: int):
        # canonical correction with mu = H; linear in mu like everything else
        g = self.geometry
        H = self._H
        if d2 > d1:
            gap = d2 - d1
            acc = self.n2D(gap, d1, H) + self.n2B(gap, d1, H)
            acc += d1 * (
                self.gamma2(gap, d1)
                + Rat(1, 2)
                * sum((self.m3(p, d1, gap - p) for p in range(1, gap)), Rat(0))
            )
            return acc
        if d2 < d1:
            return self._corr2(d2, d1)
        acc = Rat(g.base_n1pt(d1, ring_mul(g.c2, H)))
        acc += self.n1E(d1, H) + self.n1D(d1, H, g.c2) + d1 * self.gamma1(d1)
        acc -= sum(
            (
                2 * self.n2D(p, d2 - p, H) + Rat(5, 2) * self.n2B(p, d2 - p, H)
                for p in range(1, d2)
            ),
            Rat(0),
        )
        return acc

    def _c_n2C(self, d1: int, d2: int):
        acc = self.n2A(d1, d2, self._H2) - 2 * d2 * self.n2B(d1, d2, self._H)
        acc += sum(
            (p * p * self.m3(d1, d2 - p, p) for p in range(1, d2)), Rat(0)
        )
        return acc / Rat(d2 * d2)

    def _c_n2D(self, d1: int, d2: int):
        H = self._H
        # the cotangent reduction on the second component pairs the divisor
        # with that component's class, hence the leading factor d2
        acc = d2 * self.n2A(d1, d2, self._H2)
        acc -= 2 * d2 * self.n2A(d1, d2, ring_mul(H, H))
        acc += sum(
            (
                (p * (d2 - p) ** 2 + (d2 - p) * p * p) * self.m3(d1, d2 - p, p)
                for p in range(1, d2)
            ),
            Rat(0),
        )
        return acc / Rat(d2 * d2)

    def _c_n2E(self, d1: int, d2: int):
        return -sum((self.m3(d1, d2 - p, p) for p in range(1, d2)), Rat(0))

    def _c_gamma2(self, d1: int, d2: int):
        return (
            self.n2A(d1, d2, self.geometry.c2)
            + 2 * self.n2E(d1, d2)
            + self.n2C(d1, d2)
            + self.n2C(d2, d1)
        )

    def _corr3(self, d1: int, d2: int, d3: int):
        g = self.geometry
        if d3 > d1:
            c1 = self.m3(d3 - d1, d1, d2)
        elif d3 < d1:
            c1 = self.m3(d1 - d3, d3, d2)
        else:
            c1 = self.gamma2(d2, d1)

        if d3 > d2:
            c2 = -self.m3(d1, d2, d3 - d2)
        elif d3 < d2:
            c2 = -(self.m3(d1, d3, d2 - d3) + self.m3(d1, d2 - d3, d3))
        else:
            c2 = -(self.n2A(d1, d2, g.c2) + 2 * self.n2E(d1, d2))

        if d3 > d1 + d2:
            c12 = -self.m3(d3 - d1 - d2, d1, d2)
        elif d2 < d3 < d1 + d2:
            c12 = -self.m3(d1 + d2 - d3, d3 - d2, d2)
        elif d3 == d1 + d2:
            c12 = -self.gamma2(d2, d1)
        else:
            c12 = Rat(0)
        return c1, c2, c12

    def _c_m3(self, d1: int, d2: int, d3: int):
        g = self.geometry
        acc = Rat(0)
        for w, ws in g.diagonal_pairs:
            if w.homogeneous_power() == 2:
                acc += self.n2A(d1, d2, w) * Rat(g.base_n1pt(d3, ws))
        c1, c2, c12 = self._corr3(d1, d2, d3)
        return acc - c1 - c2 - c12

    def _c_chern(self, d: int):
        g = self.geometry
        acc = -(self.n1G(d) + self.n1C(d, g.c2) + Rat(g.base_n1pt(d, g.c3)))
        acc += Rat(1, 2) * sum(
            (self.n2C(a, d - a) + self.n2C(d - a, a) for a in range(1, d)),
            Rat(0),
        )
        return acc
