"""Concrete point-curve incidence structures.

An incidence structure records, for each singular point, the set of curves
through it; points carry no coordinates, because every formula in this
package consumes only incidence data.  Structures can *realize* an abstract
profile (or refute one): :func:`audit` verifies that every pair of curves
co-occurs in exactly h points, that per-curve incidence counts match the
double-count identity, and that per-curve multiplicity counts aggregate to
the global ones.

The structure is also the only object that can witness the four-curve
hypothesis (:func:`check_four_curve`) and it backs the rank oracle: for any
audited structure with constant pairwise co-occurrence and no point on all
d curves, the d x f0 incidence matrix has exact rank d over the rationals,
hence f0 >= d.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from . import reports
from .arrangement import ArrangementProfile
from .errors import AuditFailed, InputFormatError, ParameterRange
from .reports import ValidationReport
from .surface import NumClass, RuledSurface

__all__ = [
    "IncidenceStructure",
    "CurveStats",
    "AuditReport",
    "audit",
    "profile_of",
    "realize_generic",
    "check_four_curve",
    "incidence_rank",
    "curve_stats",
    "incidence_from_json",
    "incidence_to_json",
]


class AuditReport(ValidationReport):
    """Report of :func:`audit`; same shape as a validation report."""


@dataclass(frozen=True)
class IncidenceStructure:
    """Curves 1..d and, for each singular point, its incident curve set."""

    d: int
    points: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")
        for idx, pt in enumerate(self.points):
            if len(pt) < 2:
                raise ValueError(f"point {idx} lies on {len(pt)} curve(s); need >= 2")
            for c in pt:
                if not 1 <= c <= self.d:
                    raise ValueError(f"point {idx} references curve {c} outside 1..{self.d}")

    @classmethod
    def from_points(cls, d: int, points: Iterable[Iterable[int]]) -> "IncidenceStructure":
        return cls(d, tuple(frozenset(pt) for pt in points))

    @property
    def f0(self) -> int:
        return len(self.points)

    def multiplicity_counts(self) -> dict[int, int]:
        """Global t_k: number of points lying on exactly k curves."""
        return dict(sorted(Counter(len(pt) for pt in self.points).items()))


@dataclass(frozen=True)
class CurveStats:
    """Multiplicity counts of the points on a single curve."""

    curve_index: int
    t_k_j: Mapping[int, int]

    def __post_init__(self) -> None:
        clean = {k: c for k, c in sorted(self.t_k_j.items()) if c}
        for k, c in clean.items():
            if k < 2 or c < 0:
                raise ValueError(f"bad per-curve count t[{k}] = {c}")
        object.__setattr__(self, "t_k_j", clean)

    @property
    def f0_j(self) -> int:
        return sum(self.t_k_j.values())

    @property
    def t2_j(self) -> int:
        return self.t_k_j.get(2, 0)

    @property
    def t6_j(self) -> int:
        return self.t_k_j.get(6, 0)


def curve_stats(inc: IncidenceStructure, j: int) -> CurveStats:
    if not 1 <= j <= inc.d:
        raise ParameterRange(f"curve index {j} outside 1..{inc.d}")
    counts = Counter(len(pt) for pt in inc.points if j in pt)
    return CurveStats(j, dict(counts))


def audit(inc: IncidenceStructure, expected_h: int) -> AuditReport:
    """Verify that the structure realizes constant pairwise intersection h.

    Three independent checks, each reported with its first counterexample:
    (i) every unordered pair of curves co-occurs in exactly h points;
    (ii) for every curve j, sum over its points of (r_p - 1) equals h*(d-1);
    (iii) per-curve multiplicity counts aggregate to k*t_k for every k.
    """
    pair_counts: Counter[tuple[int, int]] = Counter()
    for pt in inc.points:
        pair_counts.update(itertools.combinations(sorted(pt), 2))
    pair_check = reports.passed("pair_cooccurrence")
    for i, j in itertools.combinations(range(1, inc.d + 1), 2):
        got = pair_counts.get((i, j), 0)
        if got != expected_h:
            pair_check = reports.failed(
                "pair_cooccurrence",
                f"curves ({i},{j}) co-occur in {got} points, expected {expected_h}",
            )
            break

    degree_check = reports.passed("curve_degree_sum")
    target = expected_h * (inc.d - 1)
    for j in range(1, inc.d + 1):
        total = sum(len(pt) - 1 for pt in inc.points if j in pt)
        if total != target:
            degree_check = reports.failed(
                "curve_degree_sum",
                f"curve {j}: sum of (r_p - 1) is {total}, expected {target}",
            )
            break

    aggregate_check = reports.passed("multiplicity_double_count")
    global_t = inc.multiplicity_counts()
    per_curve_totals: Counter[int] = Counter()
    for j in range(1, inc.d + 1):
        per_curve_totals.update(curve_stats(inc, j).t_k_j)
    for k in sorted(set(global_t) | set(per_curve_totals)):
        if per_curve_totals.get(k, 0) != k * global_t.get(k, 0):
            aggregate_check = reports.failed(
                "multiplicity_double_count",
                f"multiplicity {k}: per-curve total {per_curve_totals.get(k, 0)}"
                f" != k*t_k = {k * global_t.get(k, 0)}",
            )
            break

    return AuditReport((pair_check, degree_check, aggregate_check))


def profile_of(inc: IncidenceStructure, s: RuledSurface, cls: NumClass) -> ArrangementProfile:
    """Profile realized by the structure on the given surface and class.

    Requires a passing audit against h = 2ab - a^2*e.  ``c0_disjoint`` is
    never inferred; the four-curve flag is set only when the structure
    proves it.
    """
    expected_h = 2 * cls.a * cls.b - cls.a * cls.a * s.invariant_e
    report = audit(inc, expected_h)
    if not report.passed:
        names = ", ".join(c.name for c in report.failed)
        raise AuditFailed(report, f"incidence audit failed: {names}")
    four = inc.d >= 4 and check_four_curve(inc)
    return ArrangementProfile(
        s,
        cls,
        inc.d,
        inc.multiplicity_counts(),
        c0_disjoint=False,
        a1_four_curve_flag=four,
    )


def realize_generic(d: int, h: int) -> IncidenceStructure:
    """Canonical witness that generic profiles are incidence-realizable.

    For each of the binom(d, 2) curve pairs, emits h distinct double points,
    ordered lexicographically by (i, j, copy).
    """
    if d < 2:
        raise ParameterRange(f"realize_generic requires d >= 2, got {d}")
    if h < 1:
        raise ParameterRange(f"realize_generic requires h >= 1, got {h}")
    points = tuple(
        frozenset((i, j))
        for i, j in itertools.combinations(range(1, d + 1), 2)
        for _ in range(h)
    )
    return IncidenceStructure(d, points)


def check_four_curve(inc: IncidenceStructure) -> bool:
    """True iff some four curves have no point common to all of them.

    A quadruple of curves shares a point exactly when it is contained in
    some point's incident set, so it suffices to compare the number of
    covered quadruples against binom(d, 4).
    """
    if inc.d < 4:
        raise ParameterRange(f"four-curve check requires d >= 4, got {inc.d}")
    covered: set[tuple[int, ...]] = set()
    for pt in inc.points:
        if len(pt) == inc.d:
            return False
        if len(pt) >= 4:
            covered.update(itertools.combinations(sorted(pt), 4))
    return len(covered) < math.comb(inc.d, 4)


def incidence_rank(inc: IncidenceStructure) -> int:
    """Exact rank over Q of the d x f0 zero-one incidence matrix.

    Rational Gaussian elimination with a deterministic pivot rule: the first
    nonzero entry in row-major order.  No floating point anywhere.
    """
    ncols = len(inc.points)
    rows = [
        [Fraction(1) if i in pt else Fraction(0) for pt in inc.points]
        for i in range(1, inc.d + 1)
    ]
    pivot_row = 0
    for col in range(ncols):
        if pivot_row == len(rows):
            break
        sel = next((r for r in range(pivot_row, len(rows)) if rows[r][col]), None)
        if sel is None:
            continue
        rows[pivot_row], rows[sel] = rows[sel], rows[pivot_row]
        pivot = rows[pivot_row][col]
        for r in range(pivot_row + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / pivot
                row, prow = rows[r], rows[pivot_row]
                for c in range(col, ncols):
                    row[c] -= factor * prow[c]
        pivot_row += 1
    return pivot_row


# --- JSON interchange -------------------------------------------------------
#
# Incidence documents look like {"d": 4, "points": [[1, 2], [1, 3], ...]}
# with 1-based curve indices.  Unknown keys are rejected.


def incidence_from_json(doc: object) -> IncidenceStructure:
    if not isinstance(doc, dict):
        raise InputFormatError("incidence document must be a JSON object")
    unknown = sorted(set(doc) - {"d", "points"})
    if unknown:
        raise InputFormatError(f"incidence document has unknown keys: {unknown}")
    d = doc.get("d")
    if isinstance(d, bool) or not isinstance(d, int):
        raise InputFormatError("incidence 'd' must be a JSON integer")
    pts = doc.get("points")
    if not isinstance(pts, list):
        raise InputFormatError("incidence 'points' must be a JSON array")
    points: list[frozenset[int]] = []
    for idx, entry in enumerate(pts):
        if not isinstance(entry, list):
            raise InputFormatError(f"points[{idx}] must be a JSON array")
        for c in entry:
            if isinstance(c, bool) or not isinstance(c, int):
                raise InputFormatError(f"points[{idx}] contains a non-integer: {c!r}")
        fs = frozenset(entry)
        if len(fs) != len(entry):
            raise InputFormatError(f"points[{idx}] repeats a curve index")
        points.append(fs)
    try:
        return IncidenceStructure(d, tuple(points))
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def incidence_to_json(inc: IncidenceStructure) -> dict:
    return {"d": inc.d, "points": [sorted(pt) for pt in inc.points]}
