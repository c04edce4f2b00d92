"""Lower bounds for Harbourne constants and the Hirzebruch-type inequalities.

All bounds flow from one Miyaoka-Sakai-type inequality on the abelian cover:
the normalized BMY gap (see :mod:`harbourne.covering`) dominates the
contributions of the special curves the cover contains — 9/2 for each
(-2)-curve over a triple point, 4 for each elliptic (-4)-curve over a
quadruple point, and, when the arrangement avoids the section C0, an extra
2 + e + 1/e for each of the rational (-e)-curves over C0.

Spelled out in arrangement data, the general case gives the equivalent pair

    (chern form)          16 - 16g + d(2ae - 5a^2 e + 10ab + 4ag - 4a - 4b)
                          + 9 f0 - 2 f1 - 4 t2 - t4 - (9/4) t3  >=  0
    (multiplicity form)   t2 + (3/4) t3  >=  -16 + 16g + sum_{k>=5} (2k-9) t_k
                          + d(e(5a^2 - 2a) - 10ab - 4ag + 4a + 4b)

and feeding the chern form into H = (h*d - f1)/f0 yields the general lower
bound for the Harbourne constant.  The C0-disjoint variant (which forces
b = a*e) strengthens the constant term and drops the -8/f0 correction.

The bounds are *reported* even when the hypotheses behind them fail, with
explicit flags naming the violated hypothesis: a combinatorially valid
profile that breaks an inequality is falsifying the geometric hypotheses
for that input, not triggering a software error.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, NamedTuple

from .arrangement import (
    ArrangementProfile,
    harbourne_constant,
    require_valid,
    require_valid_nonempty,
    validate_four_curve,
)
from .errors import (
    BNotAE,
    C0DisjointRequired,
    InconsistentCurveStats,
    ParameterRange,
)
from .incidence import CurveStats
from .surface import RuledSurface

__all__ = [
    "MValue",
    "MValueKind",
    "BoundReport",
    "HirzebruchVerdict",
    "C0HirzebruchVerdict",
    "AdjointDegree",
    "StrictTransformBound",
    "adjoint_degree_exceptional",
    "adjoint_degree_strict_transform",
    "hirzebruch_inequality",
    "chern_form_residual",
    "c0_hirzebruch_inequality",
    "harbourne_lower_bound",
    "c0_disjoint_lower_bound",
    "global_lower_bound",
    "corollary_f0_floor",
    "strict_transform_bound",
    "bound_report",
    "m_value_minus_two",
    "m_value_rational_curve",
]


class MValueKind(Enum):
    MINUS_TWO_RATIONAL = "minus_two_rational"
    RATIONAL_SELF_INTERSECTION_MINUS_E = "rational_self_intersection_minus_e"


@dataclass(frozen=True)
class MValue:
    """Positive contribution of a rational-curve configuration to the inequality."""

    kind: MValueKind
    value: Fraction


def m_value_minus_two() -> MValue:
    """m = 9/2 for a single rational (-2)-curve."""
    return MValue(MValueKind.MINUS_TWO_RATIONAL, Fraction(9, 2))


def m_value_rational_curve(e: int) -> MValue:
    """m = 2 + e + 1/e for a rational curve of self-intersection -e."""
    if e <= 0:
        raise ParameterRange(f"self-intersection -e needs e > 0, got e = {e}")
    return MValue(
        MValueKind.RATIONAL_SELF_INTERSECTION_MINUS_E, 2 + e + Fraction(1, e)
    )


def adjoint_degree_exceptional(r_p: int) -> Fraction:
    """Degree of the cover's adjoint divisor against the exceptional curve
    over a point of multiplicity r_p: -1 + (r_p - 1)/2, never negative."""
    if r_p < 3:
        raise ParameterRange(f"requires r_p >= 3, got {r_p}")
    return Fraction(r_p - 3, 2)


class AdjointDegree(NamedTuple):
    value: Fraction
    nonnegative: bool


def adjoint_degree_strict_transform(p: ArrangementProfile, cs: CurveStats) -> AdjointDegree:
    """Degree of the adjoint divisor against the strict transform of one curve.

    2ae - 2b + (2g - e - 2)a + h/2 + f0_j - t2_j/2; non-negative whenever the
    standing hypotheses hold and the per-curve stats come from an actual
    arrangement (the double-count identity forces f0_j - t2_j/2 >= h).
    """
    require_valid(p)
    _check_consistent(p, cs)
    g, e = p.surface.genus, p.surface.invariant_e
    a, b = p.curve_class.a, p.curve_class.b
    value = (
        2 * a * e - 2 * b + (2 * g - e - 2) * a + Fraction(p.h, 2)
        + cs.f0_j - Fraction(cs.t2_j, 2)
    )
    return AdjointDegree(value, value >= 0)


class HirzebruchVerdict(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    holds: bool


def chern_form_residual(p: ArrangementProfile) -> Fraction:
    """Residual of the chern form of the inequality; >= 0 means it holds."""
    st = require_valid(p)
    g, e = p.surface.genus, p.surface.invariant_e
    a, b = p.curve_class.a, p.curve_class.b
    t2, t3, t4 = p.t.get(2, 0), p.t.get(3, 0), p.t.get(4, 0)
    return (
        16 - 16 * g
        + p.d * (2 * a * e - 5 * a * a * e + 10 * a * b + 4 * a * g - 4 * a - 4 * b)
        + 9 * st.f0 - 2 * st.f1 - 4 * t2 - t4 - Fraction(9, 4) * t3
    )


def hirzebruch_inequality(p: ArrangementProfile) -> HirzebruchVerdict:
    """The multiplicity form t2 + (3/4)t3 >= rhs, cross-checked internally.

    The chern form and the multiplicity form are rearrangements of each
    other; both are evaluated and their verdicts compared on every call.
    """
    require_valid(p)
    g, e = p.surface.genus, p.surface.invariant_e
    a, b = p.curve_class.a, p.curve_class.b
    t2, t3 = p.t.get(2, 0), p.t.get(3, 0)
    lhs = t2 + Fraction(3, 4) * t3
    rhs = (
        -16 + 16 * g
        + sum((2 * k - 9) * c for k, c in p.t.items() if k >= 5)
        + p.d * (e * (5 * a * a - 2 * a) - 10 * a * b - 4 * a * g + 4 * a + 4 * b)
    )
    holds = lhs >= rhs
    if holds != (chern_form_residual(p) >= 0):
        raise AssertionError("chern form and multiplicity form verdicts disagree")
    return HirzebruchVerdict(Fraction(lhs), Fraction(rhs), holds)


class C0HirzebruchVerdict(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    relaxed_rhs: Fraction
    holds: bool
    relaxed_holds: bool


def c0_hirzebruch_inequality(p: ArrangementProfile) -> C0HirzebruchVerdict:
    """Strengthened inequality for arrangements disjoint from C0 (b = a*e).

    The exact right-hand side carries 4(e + 1/e) - 8; the relaxed form
    replaces it by 9, valid since 4(e + 1/e) >= 17 for e >= 4, so the
    relaxed inequality is never stricter.
    """
    _require_c0(p)
    g, e = p.surface.genus, p.surface.invariant_e
    a = p.curve_class.a
    t2, t3 = p.t.get(2, 0), p.t.get(3, 0)
    lhs = t2 + Fraction(3, 4) * t3
    tail = (
        16 * g
        + sum((2 * k - 9) * c for k, c in p.t.items() if k >= 5)
        + p.d * (-5 * a * a * e + 2 * a * e - 4 * a * g + 4 * a)
    )
    rhs = 4 * (e + Fraction(1, e)) - 8 + tail
    relaxed_rhs = 9 + tail
    return C0HirzebruchVerdict(
        Fraction(lhs), rhs, Fraction(relaxed_rhs), lhs >= rhs, lhs >= relaxed_rhs
    )


def harbourne_lower_bound(p: ArrangementProfile) -> Fraction:
    """General lower bound for the Harbourne constant of a valid profile."""
    st = require_valid_nonempty(p)
    g, e = p.surface.genus, p.surface.invariant_e
    a, b = p.curve_class.a, p.curve_class.b
    t2, t3, t4 = p.t.get(2, 0), p.t.get(3, 0), p.t.get(4, 0)
    return (
        Fraction(-9, 2)
        - Fraction(8, st.f0)
        + Fraction(p.d, st.f0) * (Fraction(a * e - 2 * b, 2) * (3 * a - 2) - 2 * a * (g - 1))
        + Fraction(16 * g + 4 * t2 + t4, 2 * st.f0)
        + Fraction(9 * t3, 8 * st.f0)
    )


def c0_disjoint_lower_bound(p: ArrangementProfile) -> Fraction:
    """Improved lower bound when no curve of the arrangement meets C0."""
    st = _require_c0(p)
    g, e = p.surface.genus, p.surface.invariant_e
    a = p.curve_class.a
    t2, t3, t4 = p.t.get(2, 0), p.t.get(3, 0), p.t.get(4, 0)
    return (
        Fraction(-9, 2)
        + Fraction(p.d, st.f0) * Fraction(a * e * (2 - 3 * a) - 4 * a * (g - 1), 2)
        + Fraction(16 * g + 4 * t2 + t4, 2 * st.f0)
        + Fraction(9 * t3, 8 * st.f0)
    )


def global_lower_bound(s: RuledSurface, a: int, b: int) -> Fraction:
    """Lower bound for the infimum of Harbourne constants over all admissible
    arrangements of class (a, b): one branch for b > a*e, one for b = a*e."""
    e, g = s.invariant_e, s.genus
    if e < 4:
        raise ParameterRange(f"global bound requires e >= 4, got {e}")
    if a <= 0:
        raise ParameterRange(f"global bound requires a > 0, got {a}")
    if b > a * e:
        return Fraction(-11, 2) + Fraction(a * e - 2 * b, 2) * (3 * a - 2) - 2 * a * g
    if b == a * e:
        return Fraction(-9, 2) + Fraction(a * e * (2 - 3 * a) - 4 * a * g, 2)
    raise ParameterRange(f"global bound requires b >= a*e, got b = {b}, a*e = {a * e}")


def corollary_f0_floor(a: int, b: int, e: int) -> int:
    """Every admissible arrangement has f0 >= 2ab - a^2*e + 2 (and >= 8 when
    b > a*e and e >= 4); exposed as a checkable side condition."""
    return 2 * a * b - a * a * e + 2


class StrictTransformBound(NamedTuple):
    lower: Fraction
    value: Fraction


def strict_transform_bound(p: ArrangementProfile) -> StrictTransformBound:
    """Self-intersection of the strict transform after blowing up Sing(C).

    The value is f0 * H exactly; the lower bound is f0 times the applicable
    Harbourne-constant bound (C0-disjoint variant when it applies).
    """
    st = require_valid_nonempty(p)
    g, e = p.surface.genus, p.surface.invariant_e
    a, b = p.curve_class.a, p.curve_class.b
    t2, t3, t4 = p.t.get(2, 0), p.t.get(3, 0), p.t.get(4, 0)
    common = 8 * g + 2 * t2 + Fraction(t4, 2) + Fraction(9 * t3, 8)
    if p.c0_disjoint and b == a * e:
        lower = (
            Fraction(-9, 2) * st.f0
            + p.d * Fraction(a * e * (2 - 3 * a) - 4 * a * (g - 1), 2)
            + common
        )
    else:
        lower = (
            -8
            + Fraction(-9, 2) * st.f0
            + p.d * (Fraction(a * e - 2 * b, 2) * (3 * a - 2) - 2 * a * (g - 1))
            + common
        )
    value = st.f0 * harbourne_constant(p)
    return StrictTransformBound(lower, value)


@dataclass(frozen=True)
class BoundReport:
    """Every bound for one profile, with named pass/fail flags.

    ``satisfied`` records both the inequalities themselves and the
    hypotheses they rely on (``hypothesis_*`` keys); a false inequality
    under true hypotheses falsifies realizability of the input.
    """

    harbourne: Fraction
    general_lower: Fraction
    c0_lower: Fraction | None
    hirzebruch_lhs: Fraction
    hirzebruch_rhs: Fraction
    chern_residual: Fraction
    satisfied: Mapping[str, bool]


def bound_report(p: ArrangementProfile) -> BoundReport:
    require_valid_nonempty(p)
    a, b = p.curve_class.a, p.curve_class.b
    e = p.surface.invariant_e
    harbourne = harbourne_constant(p)
    general = harbourne_lower_bound(p)
    hirz = hirzebruch_inequality(p)
    residual = chern_form_residual(p)
    four_curve = validate_four_curve(p).check("four_curve_condition").status
    satisfied = {
        "harbourne_ge_general_lower": harbourne >= general,
        "hirzebruch_multiplicity_form": hirz.holds,
        "hypothesis_four_curve": four_curve.value == "pass",
        "hypothesis_b_gt_ae": b > a * e,
        "hypothesis_c0_disjoint": p.c0_disjoint,
    }
    c0_lower = None
    if p.c0_disjoint and b == a * e:
        c0_lower = c0_disjoint_lower_bound(p)
        c0_verdict = c0_hirzebruch_inequality(p)
        satisfied["harbourne_ge_c0_lower"] = harbourne >= c0_lower
        satisfied["c0_hirzebruch_exact_form"] = c0_verdict.holds
        satisfied["c0_hirzebruch_relaxed_form"] = c0_verdict.relaxed_holds
    return BoundReport(
        harbourne=harbourne,
        general_lower=general,
        c0_lower=c0_lower,
        hirzebruch_lhs=hirz.lhs,
        hirzebruch_rhs=hirz.rhs,
        chern_residual=residual,
        satisfied=satisfied,
    )


def _require_c0(p: ArrangementProfile):
    st = require_valid(p)
    if not p.c0_disjoint:
        raise C0DisjointRequired("profile does not assert disjointness from C0")
    a, b = p.curve_class.a, p.curve_class.b
    if b != a * p.surface.invariant_e:
        raise BNotAE(
            f"a class disjoint from C0 forces b = a*e; got b = {b},"
            f" a*e = {a * p.surface.invariant_e}"
        )
    return st


def _check_consistent(p: ArrangementProfile, cs: CurveStats) -> None:
    if not 1 <= cs.curve_index <= p.d:
        raise InconsistentCurveStats(
            f"curve index {cs.curve_index} outside 1..{p.d}"
        )
    for k, c in cs.t_k_j.items():
        if c > p.t.get(k, 0):
            raise InconsistentCurveStats(
                f"curve {cs.curve_index} claims {c} points of multiplicity {k},"
                f" but the profile has only {p.t.get(k, 0)}"
            )
