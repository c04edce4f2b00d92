"""Exact rational helpers and deterministic decimal rendering.

All arithmetic in this package is exact (Python ints and ``fractions.Fraction``).
Decimal strings are a display concern only: rounding is half-even, done on the
exact scaled integer, never through binary floating point.
"""

from __future__ import annotations

from fractions import Fraction

Rational = int | Fraction


def as_fraction(value: Rational) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def rational_parts(value: Rational) -> tuple[int, int]:
    """Return (numerator, denominator) in lowest terms with denominator > 0."""
    f = as_fraction(value)
    return f.numerator, f.denominator


def decimal_string(value: Rational, places: int = 6) -> str:
    """Render ``value`` with exactly ``places`` digits after the point.

    Rounding is round-half-even on the exact value (``round`` on a Fraction
    is exact bankers' rounding), so output never depends on float behaviour.
    """
    if places < 0:
        raise ValueError("places must be >= 0")
    scaled = round(as_fraction(value) * 10**places)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if places == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**places)
    return f"{sign}{whole}.{frac:0{places}d}"
