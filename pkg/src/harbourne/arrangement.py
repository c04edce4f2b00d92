"""Transversal-arrangement profiles and their combinatorial invariants.

A *profile* is the abstract data of a transversal arrangement of d smooth
curves on a ruled surface, all in a common class a*C0 + b*f: the number of
curves d and the multiplicity counts t_k (number of points lying on exactly
k curves).  Two curves of the arrangement meet in h = 2ab - a^2*e distinct
points, so double counting incidences forces

    f2 - f1 = sum_k k*(k-1)*t_k = h*d*(d-1),

where f_i = sum_{k>=2} k^i * t_k.  The standing hypotheses for every bound
in this package are e >= 4, d >= 4, a > 0, b >= a*e and t_d = 0; they are
checked by :func:`validate_profile`, which reports all violations at once
rather than failing fast.

The Harbourne constant of the arrangement is

    H = (h*d^2 - f2) / f0,

the self-intersection of the strict transform after blowing up every
singular point, divided by the number of singular points.  It is exposed as
an exact rational; decimal rendering is a display concern only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Mapping

from . import reports
from .errors import (
    EmptySingularLocus,
    InputFormatError,
    ParameterRange,
    ValidationFailed,
)
from .reports import ValidationReport
from .surface import NumClass, RuledSurface

__all__ = [
    "ArrangementProfile",
    "ProfileStats",
    "ValidationReport",
    "stats",
    "validate_profile",
    "validate_four_curve",
    "harbourne_constant",
    "generic_profile",
    "profile_from_json",
    "profile_to_json",
]


@dataclass(frozen=True)
class ArrangementProfile:
    """Abstract transversal-arrangement data.

    ``t`` is stored sparsely (multiplicity -> count); arrangements with large
    d have few distinct multiplicities.  ``c0_disjoint`` asserts that no curve
    of the arrangement meets the section C0.  ``a1_four_curve_flag`` is a user
    assertion that, when a = 1, some four curves of the arrangement have no
    common point; a profile alone can never witness that condition (see
    :mod:`harbourne.incidence` for the structure-level check).
    """

    surface: RuledSurface
    curve_class: NumClass
    d: int
    t: Mapping[int, int] = field(default_factory=dict)
    c0_disjoint: bool = False
    a1_four_curve_flag: bool = False

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"d must be a positive integer, got {self.d}")
        clean: dict[int, int] = {}
        for k in sorted(self.t):
            count = self.t[k]
            if k < 2:
                raise ValueError(f"multiplicity keys must be >= 2, got {k}")
            if count < 0:
                raise ValueError(f"t[{k}] must be >= 0, got {count}")
            if count:
                clean[k] = count
        object.__setattr__(self, "t", clean)

    @property
    def h(self) -> int:
        """Pairwise intersection number 2ab - a^2*e of two arrangement members."""
        a, b = self.curve_class.a, self.curve_class.b
        return 2 * a * b - a * a * self.surface.invariant_e

    def with_flags(self, **flags: bool) -> "ArrangementProfile":
        return replace(self, **flags)


@dataclass(frozen=True)
class ProfileStats:
    """Moment sums of the multiplicity counts: f_i = sum_k k^i * t_k."""

    h: int
    f0: int
    f1: int
    f2: int

    @property
    def sum_rp_sq(self) -> int:
        """Sum of r_p^2 over singular points; equal to f2 by definition."""
        return self.f2


def stats(p: ArrangementProfile) -> ProfileStats:
    f0 = sum(p.t.values())
    f1 = sum(k * c for k, c in p.t.items())
    f2 = sum(k * k * c for k, c in p.t.items())
    return ProfileStats(h=p.h, f0=f0, f1=f1, f2=f2)


def validate_profile(p: ArrangementProfile) -> ValidationReport:
    """Check the standing arrangement hypotheses, reporting each independently.

    Checks: e >= 4, d >= 4, a > 0, b >= a*e, no multiplicity reaching d, and
    the incidence double-count f2 - f1 = h*d*(d-1).
    """
    e = p.surface.invariant_e
    a, b = p.curve_class.a, p.curve_class.b
    st = stats(p)
    checks = [
        _require("e_ge_4", e >= 4, f"e = {e}"),
        _require("d_ge_4", p.d >= 4, f"d = {p.d}"),
        _require("a_positive", a > 0, f"a = {a}"),
        _require("b_ge_ae", b >= a * e, f"b = {b}, a*e = {a * e}"),
    ]
    too_big = sorted(k for k, c in p.t.items() if k >= p.d and c > 0)
    checks.append(
        _require(
            "t_d_zero",
            not too_big,
            f"nonzero counts at multiplicities >= d: {too_big}" if too_big else "",
        )
    )
    expected = st.h * p.d * (p.d - 1)
    checks.append(
        _require(
            "counting_identity",
            st.f2 - st.f1 == expected,
            f"f2 - f1 = {st.f2 - st.f1}, h*d*(d-1) = {expected}",
        )
    )
    return ValidationReport(tuple(checks))


def validate_four_curve(p: ArrangementProfile) -> ValidationReport:
    """Check the no-common-point-on-four-curves hypothesis.

    Automatic for a >= 2.  For a = 1 the profile cannot witness it: the
    report passes only if the user asserted it (``a1_four_curve_flag``),
    and is *unverifiable* otherwise — audit an incidence structure with
    :func:`harbourne.incidence.check_four_curve` to settle it.
    """
    base = validate_profile(p)
    a = p.curve_class.a
    if a >= 2:
        extra = reports.passed("four_curve_condition", f"a = {a} >= 2")
    elif a == 1 and p.a1_four_curve_flag:
        extra = reports.passed("four_curve_condition", "asserted for a = 1")
    elif a == 1:
        extra = reports.unverifiable(
            "four_curve_condition",
            "a = 1 and not asserted; check a concrete incidence structure",
        )
    else:
        extra = reports.failed("four_curve_condition", f"a = {a} is not positive")
    return ValidationReport(base.checks + (extra,))


def require_valid(p: ArrangementProfile) -> ProfileStats:
    """Raise ValidationFailed unless ``p`` passes; return its stats."""
    report = validate_profile(p)
    if not report.passed:
        names = ", ".join(c.name for c in report.failed)
        raise ValidationFailed(report, f"profile fails validation: {names}")
    return stats(p)


def require_valid_nonempty(p: ArrangementProfile) -> ProfileStats:
    """As :func:`require_valid`, but demand a non-empty singular locus first."""
    if stats(p).f0 == 0:
        raise EmptySingularLocus("profile has no singular points (f0 = 0)")
    return require_valid(p)


def harbourne_constant(p: ArrangementProfile) -> Fraction:
    """Exact Harbourne constant (h*d^2 - f2) / f0 of a valid profile."""
    st = require_valid_nonempty(p)
    return _harbourne_from_counts(st.h, p.d, st.f2, st.f0)


def _harbourne_from_counts(h, d, f2, f0) -> Fraction:
    return Fraction(h * d * d - f2, f0)


def generic_profile(s: RuledSurface, cls: NumClass, d: int) -> ArrangementProfile:
    """Profile of a general arrangement: every singular point is a node.

    Each of the binom(d, 2) curve pairs contributes h transverse double
    points, so t_2 = binom(d, 2)*h and the Harbourne constant is
    -2(d-2)/(d-1) independently of the class.
    """
    e = s.invariant_e
    if d < 4:
        raise ParameterRange(f"generic profile requires d >= 4, got {d}")
    if cls.a <= 0:
        raise ParameterRange(f"generic profile requires a > 0, got {cls.a}")
    if e < 4:
        raise ParameterRange(f"generic profile requires e >= 4, got {e}")
    if cls.b < cls.a * e:
        raise ParameterRange(f"generic profile requires b >= a*e, got b = {cls.b}")
    h = 2 * cls.a * cls.b - cls.a * cls.a * e
    return ArrangementProfile(s, cls, d, {2: math.comb(d, 2) * h})


def _require(name: str, ok: bool, detail: str = "") -> reports.CheckResult:
    return reports.passed(name, "") if ok else reports.failed(name, detail)


# --- JSON interchange -------------------------------------------------------
#
# Profile documents look like
#   {"surface": {"g": 0, "e": 4}, "class": {"a": 1, "b": 4}, "d": 21,
#    "t": {"3": 112, "4": 84}, "c0_disjoint": true, "a1_four_curve_flag": false}
# All numbers are integers; unknown keys are rejected.  The two flags may be
# omitted and default to false.

_TOP_KEYS = {"surface", "class", "d", "t", "c0_disjoint", "a1_four_curve_flag"}


def profile_from_json(doc: object) -> ArrangementProfile:
    obj = _expect_object(doc, "profile")
    _reject_unknown(obj, _TOP_KEYS, "profile")
    surf = _expect_object(_expect_key(obj, "surface", "profile"), "surface")
    _reject_unknown(surf, {"g", "e"}, "surface")
    cls = _expect_object(_expect_key(obj, "class", "profile"), "class")
    _reject_unknown(cls, {"a", "b"}, "class")
    t_doc = _expect_object(_expect_key(obj, "t", "profile"), "t")
    t: dict[int, int] = {}
    for key in t_doc:
        try:
            k = int(key, 10)
        except (TypeError, ValueError):
            raise InputFormatError(f"t key {key!r} is not an integer string") from None
        if k < 2:
            raise InputFormatError(f"t key {key!r} must be >= 2")
        t[k] = _expect_int(t_doc[key], f"t[{key}]")
    g = _expect_int(_expect_key(surf, "g", "surface"), "surface.g")
    e = _expect_int(_expect_key(surf, "e", "surface"), "surface.e")
    a = _expect_int(_expect_key(cls, "a", "class"), "class.a")
    b = _expect_int(_expect_key(cls, "b", "class"), "class.b")
    d = _expect_int(_expect_key(obj, "d", "profile"), "d")
    c0 = _expect_bool(obj.get("c0_disjoint", False), "c0_disjoint")
    a1 = _expect_bool(obj.get("a1_four_curve_flag", False), "a1_four_curve_flag")
    try:
        return ArrangementProfile(
            RuledSurface(g, e), NumClass(a, b), d, t, c0_disjoint=c0, a1_four_curve_flag=a1
        )
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def profile_to_json(p: ArrangementProfile) -> dict:
    return {
        "surface": {"g": p.surface.genus, "e": p.surface.invariant_e},
        "class": {"a": p.curve_class.a, "b": p.curve_class.b},
        "d": p.d,
        "t": {str(k): c for k, c in sorted(p.t.items())},
        "c0_disjoint": p.c0_disjoint,
        "a1_four_curve_flag": p.a1_four_curve_flag,
    }


def _expect_object(doc: object, ctx: str) -> dict:
    if not isinstance(doc, dict):
        raise InputFormatError(f"{ctx} must be a JSON object, got {type(doc).__name__}")
    return doc


def _reject_unknown(obj: dict, allowed: set[str], ctx: str) -> None:
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise InputFormatError(f"{ctx} has unknown keys: {unknown}")


def _expect_key(obj: dict, key: str, ctx: str) -> object:
    if key not in obj:
        raise InputFormatError(f"{ctx} is missing required key {key!r}")
    return obj[key]


def _expect_int(value: object, ctx: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputFormatError(f"{ctx} must be a JSON integer, got {value!r}")
    return value


def _expect_bool(value: object, ctx: str) -> bool:
    if not isinstance(value, bool):
        raise InputFormatError(f"{ctx} must be a JSON boolean, got {value!r}")
    return value
