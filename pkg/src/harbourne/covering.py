"""Chern invariants of the desingularized double-kummer cover of an arrangement.

Branching a (Z/2)^(d-1) abelian cover over a valid arrangement of d curves
and resolving it yields a smooth surface Y whose Euler characteristic e(Y)
and canonical self-intersection c1^2(Y) are closed forms in the arrangement
data.  All values scale by 2^(d-3), so they are stored normalized by that
factor: with g, e, a, b, d as usual and f_i, t_2 the profile moments,

    e(Y)   / 2^(d-3) = 16 - 16g + d(-2a^2 e + 4ab + 2ae + 4ag - 4a - 4b) + f1 - t2
    c1^2(Y)/ 2^(d-3) = 32 - 32g + d(-a^2 e + 2ab + 4ae + 8ag - 8a - 8b) - 9 f0 + 5 f1 + t2

and the Bogomolov-Miyaoka-Yau gap 3 e(Y) - c1^2(Y) has its own closed form,

    (3 e(Y) - c1^2(Y)) / 2^(d-3)
        = 16 - 16g + d[(2b - ae)(5a - 2) + 4a(g - 1)] + 9 f0 - 2 f1 - 4 t2,

which is recomputed independently and compared against 3*euler - c1^2 as a
built-in consistency check of the algebra.

Over each blown-up point of multiplicity r >= 3 the cover contains disjoint
curves F with F^2 = -2^(r-2) and e(F) = 2^(r-2) * (4 - r) (a Hurwitz count
for the degree 2^(r-1) cover of a rational curve branched at r points); in
particular Y contains 2^(d-4) * t3 disjoint (-2)-curves over the triple
points and 2^(d-5) * t4 elliptic curves of self-intersection -4 over the
quadruple points.

The cover itself is never constructed; its existence follows from the
standard existence criterion for abelian covers, and this module is a pure
invariant calculator on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrangement import ArrangementProfile, require_valid
from .errors import NonIntegralCount, ParameterRange

__all__ = [
    "ExceptionalCurveInvariants",
    "CoverInvariants",
    "CanonicalPositivity",
    "exceptional_curve_invariants",
    "cover_invariants",
    "hirzebruch_polynomial",
    "canonical_positivity_hint",
    "euler_cover_norm",
    "c1_sq_cover_norm",
    "bmy_gap_norm",
]


@dataclass(frozen=True)
class ExceptionalCurveInvariants:
    """Invariants of one cover curve over a blown-up point of multiplicity r."""

    multiplicity: int
    self_intersection: int
    euler_characteristic: int

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2


def exceptional_curve_invariants(r_p: int) -> ExceptionalCurveInvariants:
    """F^2 = -2^(r-2), e(F) = 2^(r-2)*(4 - r) for a point of multiplicity r >= 3.

    Points of multiplicity 2 are not blown up and have no such curve.
    """
    if r_p < 3:
        raise ParameterRange(f"exceptional curves exist only for r_p >= 3, got {r_p}")
    scale = 2 ** (r_p - 2)
    return ExceptionalCurveInvariants(
        multiplicity=r_p,
        self_intersection=-scale,
        euler_characteristic=scale * (4 - r_p),
    )


# The three displayed closed forms, kept as standalone polynomial functions so
# that identity tests can evaluate them at arbitrary exact-rational arguments.


def euler_cover_norm(g, e, a, b, d, f1, t2):
    return 16 - 16 * g + d * (-2 * a * a * e + 4 * a * b + 2 * a * e + 4 * a * g - 4 * a - 4 * b) + f1 - t2


def c1_sq_cover_norm(g, e, a, b, d, f0, f1, t2):
    return (
        32 - 32 * g + d * (-a * a * e + 2 * a * b + 4 * a * e + 8 * a * g - 8 * a - 8 * b)
        - 9 * f0 + 5 * f1 + t2
    )


def bmy_gap_norm(g, e, a, b, d, f0, f1, t2):
    return (
        16 - 16 * g + d * ((2 * b - a * e) * (5 * a - 2) + 4 * a * (g - 1))
        + 9 * f0 - 2 * f1 - 4 * t2
    )


def _c1_sq_general_type_form(g, e, a, b, d, f0, f1, t2):
    # Rearrangement used by the general-type criterion; must agree with
    # c1_sq_cover_norm identically.
    return (
        32 + (8 * a * d - 32) * g + d * (a * (2 * b - a * e) + 4 * a * (e - 2) - 8 * b)
        + 5 * f1 - 9 * f0 + t2
    )


@dataclass(frozen=True)
class CoverInvariants:
    """Chern data of the cover, normalized by 2^(d-3) = 2^scale_exponent."""

    scale_exponent: int
    euler_norm: int
    c1_sq_norm: int
    bmy_gap_norm: int
    minus_two_curve_count: int
    elliptic_minus_four_count: int

    def __post_init__(self) -> None:
        if self.bmy_gap_norm != 3 * self.euler_norm - self.c1_sq_norm:
            raise AssertionError("independent BMY-gap form disagrees with 3*e - c1^2")
        if self.minus_two_curve_count < 0 or self.elliptic_minus_four_count < 0:
            raise AssertionError("curve counts must be non-negative")

    @property
    def euler_absolute(self) -> int:
        return self.euler_norm * 2**self.scale_exponent

    @property
    def c1_sq_absolute(self) -> int:
        return self.c1_sq_norm * 2**self.scale_exponent

    @property
    def bmy_gap_absolute(self) -> int:
        return self.bmy_gap_norm * 2**self.scale_exponent


def cover_invariants(p: ArrangementProfile) -> CoverInvariants:
    """Normalized Chern numbers and special-curve counts of the cover."""
    st = require_valid(p)
    g, e = p.surface.genus, p.surface.invariant_e
    a, b = p.curve_class.a, p.curve_class.b
    t2, t3, t4 = p.t.get(2, 0), p.t.get(3, 0), p.t.get(4, 0)
    euler = euler_cover_norm(g, e, a, b, p.d, st.f1, t2)
    c1_sq = c1_sq_cover_norm(g, e, a, b, p.d, st.f0, st.f1, t2)
    gap = bmy_gap_norm(g, e, a, b, p.d, st.f0, st.f1, t2)
    minus_two = 2 ** (p.d - 4) * t3
    if p.d >= 5:
        elliptic = 2 ** (p.d - 5) * t4
    else:
        # d = 4 forces t4 = 0 through the validation's t_d check; the count
        # 2^(d-5)*t4 must still come out integral.
        if t4 % 2:
            raise NonIntegralCount(f"2^(d-5)*t4 is not an integer for d = 4, t4 = {t4}")
        elliptic = t4 // 2
    return CoverInvariants(
        scale_exponent=p.d - 3,
        euler_norm=euler,
        c1_sq_norm=c1_sq,
        bmy_gap_norm=gap,
        minus_two_curve_count=minus_two,
        elliptic_minus_four_count=elliptic,
    )


def hirzebruch_polynomial(p: ArrangementProfile) -> int:
    """(3 e(Y) - c1^2(Y)) / 2^(d-3); vanishing is necessary for a ball quotient.

    Non-negativity is expected for arrangements satisfying the four-curve
    hypothesis (it follows from nefness of the cover's canonical class); it
    is reported by consumers, never enforced here.
    """
    return cover_invariants(p).bmy_gap_norm


@dataclass(frozen=True)
class CanonicalPositivity:
    """c1^2(Y)/2^(d-3) plus whether general type is guaranteed (a >= 8)."""

    value: int
    general_type_guaranteed: bool


def canonical_positivity_hint(p: ArrangementProfile) -> CanonicalPositivity:
    """Canonical self-intersection of the cover, via the general-type form.

    For a >= 8 a positive value together with nefness pins Y as a minimal
    surface of general type; the flag records only the a >= 8 hypothesis.
    """
    st = require_valid(p)
    g, e = p.surface.genus, p.surface.invariant_e
    a, b = p.curve_class.a, p.curve_class.b
    value = _c1_sq_general_type_form(g, e, a, b, p.d, st.f0, st.f1, p.t.get(2, 0))
    return CanonicalPositivity(value=value, general_type_guaranteed=a >= 8)
