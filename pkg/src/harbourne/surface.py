"""Numerical lattice of a geometrically ruled surface.

A geometrically ruled surface X -> C over a smooth curve of genus g has
Num(X) = Z*C0 + Z*f, where C0 is the normalized section and f a fiber.  With
e = -C0^2 the intersection form is determined by

    C0^2 = -e,   C0.f = 1,   f^2 = 0,

and a canonical divisor is numerically -2*C0 + (2g-2-e)*f.  Everything here
is exact integer arithmetic on that rank-two lattice; all values are
immutable and every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonNegativeEOnly


@dataclass(frozen=True)
class NumClass:
    """A numerical divisor class a*C0 + b*f."""

    a: int
    b: int

    def __add__(self, other: "NumClass") -> "NumClass":
        return NumClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "NumClass") -> "NumClass":
        return NumClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "NumClass":
        return NumClass(-self.a, -self.b)

    def __rmul__(self, n: int) -> "NumClass":
        if not isinstance(n, int):
            return NotImplemented
        return NumClass(n * self.a, n * self.b)


@dataclass(frozen=True)
class RuledSurface:
    """A ruled surface, recorded by the genus of its base and the invariant e."""

    genus: int
    invariant_e: int

    def __post_init__(self) -> None:
        if self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")

    def intersect(self, x: NumClass, y: NumClass) -> int:
        """Intersection number of two classes (bilinear in both arguments)."""
        return x.a * y.b + x.b * y.a - self.invariant_e * x.a * y.a

    def canonical_class(self) -> NumClass:
        return NumClass(-2, 2 * self.genus - 2 - self.invariant_e)

    def is_ample(self, x: NumClass) -> bool:
        """Ampleness criterion: a > 0 and b > a*e.  Only stated for e >= 0."""
        if self.invariant_e < 0:
            raise NonNegativeEOnly(
                f"ampleness criterion requires e >= 0, got e = {self.invariant_e}"
            )
        return x.a > 0 and x.b > x.a * self.invariant_e

    def euler_characteristic(self) -> int:
        """Topological Euler characteristic, 4 - 4g."""
        return 4 - 4 * self.genus

    def canonical_self_intersection(self) -> int:
        """K^2 = 8*(1 - g)."""
        return 8 * (1 - self.genus)

    def curve_genus_term(self, x: NumClass) -> int:
        """2g(C) - 2 for a smooth curve C in class x.

        Closed form of the adjunction number x.(x + K); callers relying on
        adjunction directly should get the identical value from
        ``intersect(x, x) + intersect(x, canonical_class())``.
        """
        a, b = x.a, x.b
        e, g = self.invariant_e, self.genus
        return -a * a * e + 2 * a * b + a * e + a * (2 * g - 2) - 2 * b
