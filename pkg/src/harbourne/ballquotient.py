"""Ball-quotient feasibility of the cover, and the exhaustive infeasibility scan.

A ball quotient is a minimal surface of general type sitting on the
Bogomolov-Miyaoka-Yau boundary K^2 = 3e.  If the cover of an arrangement
were one, every curve in the ramification divisor would have vanishing
relative proportionality prop(E) = 2E^2 - e(E).  For the exceptional
curves that forces every blown-up point to have multiplicity 6, so the
arrangement has only double and sixfold points; for the strict transforms
it forces, per curve j (with h = pairwise intersection, kappa = K_X . C),

    h*(d - 1) = 5*t6_j + t2_j          (incidence double count)
    4h + 2*kappa = t6_j - t2_j         (vanishing proportionality)

whose unique solution, aggregated over the d curves, pins the global counts

    t2 = (h d^2 - 21 h d - 10 kappa d) / 12
    t6 = (h d^2 +  3 h d +  2 kappa d) / 36.

Feasibility then demands that these are non-negative integers and that the
normalized BMY gap vanishes with them, which reduces to the pure parameter
identity  -16 = d[(3a - 1)(2b - ae) - 2a] + (2ad - 16)g.  The right-hand
side is positive whenever a >= 2 or (a = 1, d >= 8), and a direct estimate
rules out a = 1, 4 <= d <= 7, so no parameter choice is feasible;
:func:`scan` certifies this exhaustively on a finite grid and also checks
at every point that those two shortcut arguments agree with the direct
predicate.

Grid points are independent pure computations; the default scan is a single
deterministic pass in grid order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .arrangement import ArrangementProfile
from .errors import (
    InputFormatError,
    MultiplicityProfileNotBinary26,
    ParameterRange,
)
from .incidence import CurveStats
from .surface import RuledSurface

__all__ = [
    "BallQuotientVerdict",
    "T2T6Solution",
    "ScanGrid",
    "ScanReport",
    "proportionality_exceptional",
    "proportionality_strict_transform",
    "solve_t2_t6",
    "feasibility",
    "scan",
    "grid_from_json",
    "grid_to_json",
]

VIOLATION_NAMES = (
    "integrality",
    "nonnegativity",
    "hirzebruch_nonzero",
    "reduced_identity",
    "positivity_shortcut",
    "small_d_shortcut",
)
_CORE_VIOLATIONS = frozenset(VIOLATION_NAMES[:4])


def proportionality_exceptional(r_p: int) -> int:
    """prop(F) = 2^(r_p - 2) * (r_p - 6) for the curve over an r_p-fold point."""
    if r_p < 3:
        raise ParameterRange(f"requires r_p >= 3, got {r_p}")
    return 2 ** (r_p - 2) * (r_p - 6)


def proportionality_strict_transform(p: ArrangementProfile, cs: CurveStats) -> int:
    """Normalized prop of the cover of one strict transform: 4h + 2*kappa - t6_j + t2_j.

    Only defined when the arrangement has double and sixfold points alone
    (the simplification behind the formula); vanishing is the ball-quotient
    requirement.
    """
    from .arrangement import require_valid
    from .bounds import _check_consistent

    require_valid(p)
    _check_consistent(p, cs)
    bad = sorted(k for k in p.t if k not in (2, 6))
    if bad:
        raise MultiplicityProfileNotBinary26(
            f"profile has points of multiplicity {bad}; formula needs only 2 and 6"
        )
    g, e = p.surface.genus, p.surface.invariant_e
    a, b = p.curve_class.a, p.curve_class.b
    kappa = 2 * a * e + a * (2 * g - 2 - e) - 2 * b
    return 4 * p.h + 2 * kappa - cs.t6_j + cs.t2_j


@dataclass(frozen=True)
class T2T6Solution:
    """The double/sixfold point counts forced by vanishing proportionality."""

    pair_intersection: int
    canonical_degree: int
    t2_required: Fraction
    t6_required: Fraction

    @property
    def integrality_ok(self) -> bool:
        return self.t2_required.denominator == 1 and self.t6_required.denominator == 1

    @property
    def nonnegativity_ok(self) -> bool:
        return self.t2_required >= 0 and self.t6_required >= 0


def solve_t2_t6(s: RuledSurface, a: int, b: int, d: int) -> T2T6Solution:
    """Solve the two per-curve linear conditions and aggregate over the d curves."""
    if d < 4:
        raise ParameterRange(f"requires d >= 4, got {d}")
    core = _core(s.genus, s.invariant_e, a, b, d)
    return T2T6Solution(
        pair_intersection=core.h,
        canonical_degree=core.kappa,
        t2_required=Fraction(core.n2, 12),
        t6_required=Fraction(core.n6, 36),
    )


@dataclass(frozen=True)
class BallQuotientVerdict:
    """Outcome of the feasibility test at one parameter point.

    ``violated`` lists every failed condition by name; the four core
    conditions decide ``feasible``, while the two shortcut entries record
    that the corresponding closed-form argument independently rules the
    point out.  All flags are always computed (no lazy short-circuiting),
    so scan tallies are complete.
    """

    pair_intersection: int
    canonical_degree: int
    t2_required: Fraction
    t6_required: Fraction
    integrality_ok: bool
    nonnegativity_ok: bool
    hirzebruch_value: Fraction
    reduced_lhs: int
    reduced_rhs: int
    feasible: bool
    violated: tuple[str, ...]


@dataclass(frozen=True)
class _Core:
    h: int
    kappa: int
    n2: int       # 12 * t2
    n6: int       # 36 * t6
    base: int     # BMY gap with t2 = t6 = 0
    reduced_rhs: int
    smalld_num: int  # 5 * (small-d expression)


def _core(g: int, e: int, a: int, b: int, d: int) -> _Core:
    h = 2 * a * b - a * a * e
    kappa = 2 * a * e + a * (2 * g - 2 - e) - 2 * b
    n2 = h * d * d - 21 * h * d - 10 * kappa * d
    n6 = h * d * d + 3 * h * d + 2 * kappa * d
    base = 16 - 16 * g + d * ((2 * b - a * e) * (5 * a - 2) + 4 * a * (g - 1))
    reduced_rhs = d * ((3 * a - 1) * (2 * b - a * e) - 2 * a) + (2 * a * d - 16) * g
    smalld_num = 5 * (16 + 8 * d) - 2 * d * (d - 1)
    return _Core(h, kappa, n2, n6, base, reduced_rhs, smalld_num)


def _violations(core: _Core, a: int, d: int) -> tuple[str, ...]:
    violated = []
    if core.n2 % 12 or core.n6 % 36:
        violated.append("integrality")
    if core.n2 < 0 or core.n6 < 0:
        violated.append("nonnegativity")
    # t2 - 3*t6 = (n2 - n6)/12, so the BMY gap vanishes iff 12*base = n6 - n2.
    if 12 * core.base + core.n2 - core.n6 != 0:
        violated.append("hirzebruch_nonzero")
    if core.reduced_rhs != -16:
        violated.append("reduced_identity")
    if (a >= 2 or (a == 1 and d >= 8)) and core.reduced_rhs > 0:
        violated.append("positivity_shortcut")
    if a == 1 and 4 <= d <= 7 and core.smalld_num > 0:
        violated.append("small_d_shortcut")
    return tuple(violated)


def feasibility(s: RuledSurface, a: int, b: int, d: int) -> BallQuotientVerdict:
    """Full feasibility verdict at one parameter point."""
    g, e = s.genus, s.invariant_e
    if e < 4:
        raise ParameterRange(f"requires e >= 4, got {e}")
    if d < 4:
        raise ParameterRange(f"requires d >= 4, got {d}")
    if a <= 0:
        raise ParameterRange(f"requires a > 0, got {a}")
    if b < a * e:
        raise ParameterRange(f"requires b >= a*e, got b = {b}, a*e = {a * e}")
    core = _core(g, e, a, b, d)
    violated = _violations(core, a, d)
    hirzebruch_value = core.base + Fraction(core.n2 - core.n6, 12)
    if (hirzebruch_value == 0) != (core.reduced_rhs == -16):
        raise AssertionError("direct and reduced residuals disagree")
    return BallQuotientVerdict(
        pair_intersection=core.h,
        canonical_degree=core.kappa,
        t2_required=Fraction(core.n2, 12),
        t6_required=Fraction(core.n6, 36),
        integrality_ok="integrality" not in violated,
        nonnegativity_ok="nonnegativity" not in violated,
        hirzebruch_value=hirzebruch_value,
        reduced_lhs=-16,
        reduced_rhs=core.reduced_rhs,
        feasible=not (_CORE_VIOLATIONS & set(violated)),
        violated=violated,
    )


@dataclass(frozen=True)
class ScanGrid:
    """Inclusive parameter ranges; b ranges over a*e + [b_offset range]."""

    g: tuple[int, int] = (0, 5)
    e: tuple[int, int] = (4, 10)
    a: tuple[int, int] = (1, 5)
    b_offset: tuple[int, int] = (0, 10)
    d: tuple[int, int] = (4, 50)

    def __post_init__(self) -> None:
        nonempty = all(hi >= lo for lo, hi in self._ranges())
        if nonempty:
            if self.g[0] < 0:
                raise ParameterRange(f"grid requires g >= 0, got {self.g[0]}")
            if self.e[0] < 4:
                raise ParameterRange(f"grid requires e >= 4, got {self.e[0]}")
            if self.a[0] < 1:
                raise ParameterRange(f"grid requires a >= 1, got {self.a[0]}")
            if self.b_offset[0] < 0:
                raise ParameterRange(f"grid requires b_offset >= 0, got {self.b_offset[0]}")
            if self.d[0] < 4:
                raise ParameterRange(f"grid requires d >= 4, got {self.d[0]}")

    def _ranges(self) -> tuple[tuple[int, int], ...]:
        return (self.g, self.e, self.a, self.b_offset, self.d)

    def is_empty(self) -> bool:
        return any(hi < lo for lo, hi in self._ranges())

    def points(self) -> Iterator[tuple[int, int, int, int, int]]:
        """Grid points (g, e, a, b, d) in deterministic nested order."""
        if self.is_empty():
            return
        for g in range(self.g[0], self.g[1] + 1):
            for e in range(self.e[0], self.e[1] + 1):
                for a in range(self.a[0], self.a[1] + 1):
                    for off in range(self.b_offset[0], self.b_offset[1] + 1):
                        for d in range(self.d[0], self.d[1] + 1):
                            yield g, e, a, a * e + off, d


@dataclass(frozen=True)
class ScanReport:
    grid: ScanGrid
    total_points: int
    feasible_count: int
    infeasible_count: int
    violation_tallies: Mapping[str, int]
    witnesses: Sequence[tuple[int, int, int, int, int]] = field(default_factory=tuple)


def scan(grid: ScanGrid) -> ScanReport:
    """Run the feasibility predicate over every grid point.

    The report is deterministic (grid order).  At every point the shortcut
    arguments are compared against the direct predicate: a firing shortcut
    with a feasible direct verdict would be a contradiction and raises.
    """
    tallies = {name: 0 for name in VIOLATION_NAMES}
    total = 0
    feasible_count = 0
    witnesses: list[tuple[int, int, int, int, int]] = []
    for g, e, a, b, d in grid.points():
        total += 1
        core = _core(g, e, a, b, d)
        violated = _violations(core, a, d)
        for name in violated:
            tallies[name] += 1
        feasible = not (_CORE_VIOLATIONS & set(violated))
        shortcut = "positivity_shortcut" in violated or "small_d_shortcut" in violated
        if shortcut and feasible:
            raise AssertionError(
                f"shortcut argument disagrees with direct predicate at {(g, e, a, b, d)}"
            )
        if feasible:
            feasible_count += 1
            witnesses.append((g, e, a, b, d))
    return ScanReport(
        grid=grid,
        total_points=total,
        feasible_count=feasible_count,
        infeasible_count=total - feasible_count,
        violation_tallies=tallies,
        witnesses=tuple(witnesses),
    )


# --- JSON interchange -------------------------------------------------------
#
# Grid documents look like {"g": [0, 5], "e": [4, 10], "a": [1, 5],
# "b_offset": [0, 10], "d": [4, 50]}; omitted keys take the default grid's
# values and unknown keys are rejected.

_GRID_KEYS = ("g", "e", "a", "b_offset", "d")


def grid_from_json(doc: object) -> ScanGrid:
    if not isinstance(doc, dict):
        raise InputFormatError("grid document must be a JSON object")
    unknown = sorted(set(doc) - set(_GRID_KEYS))
    if unknown:
        raise InputFormatError(f"grid document has unknown keys: {unknown}")
    kwargs = {}
    for key in _GRID_KEYS:
        if key not in doc:
            continue
        pair = doc[key]
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or any(isinstance(v, bool) or not isinstance(v, int) for v in pair)
        ):
            raise InputFormatError(f"grid key {key!r} must be a [lo, hi] integer pair")
        kwargs[key] = (pair[0], pair[1])
    return ScanGrid(**kwargs)


def grid_to_json(grid: ScanGrid) -> dict:
    return {
        "g": list(grid.g),
        "e": list(grid.e),
        "a": list(grid.a),
        "b_offset": list(grid.b_offset),
        "d": list(grid.d),
    }
