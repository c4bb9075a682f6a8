"""Exact rational scalars.

Every numeric quantity in this library is an exact rational number;
no floating point appears anywhere on a computational path.  gmpy2's
``mpq`` is used when available (it is much faster on long memoized
recursions), with :class:`fractions.Fraction` as a pure-Python
fallback.  Both keep values in lowest terms with a positive
denominator and hash/compare interchangeably, so the two backends can
be mixed freely.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rat

__all__ = ["Rat", "parse_rational", "format_rational", "rational_pair", "is_integer"]


def parse_rational(text: str):
    """Parse ``p/q`` or a plain integer into a :data:`Rat`.

    Raises ValueError for anything else, including a zero denominator.
    """
    s = text.strip()
    if not s or any(ch.isspace() for ch in s):
        raise ValueError(f"malformed rational {text!r}")
    try:
        if "/" in s:
            num, den = s.split("/", 1)
            return Rat(int(num), int(den))
        return Rat(int(s), 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def format_rational(value) -> str:
    """Render as ``p/q``, or just ``p`` when the value is an integer."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_pair(value) -> tuple[int, int]:
    """Return ``(numerator, denominator)`` as plain ints (for JSON output)."""
    return int(value.numerator), int(value.denominator)


def is_integer(value) -> bool:
    return value.denominator == 1
