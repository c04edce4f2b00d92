"""Pull-backs of plane line arrangements to a rational ruled surface.

A rational ruled surface X_e with e >= 1 admits a degree-e finite morphism
to X_1, a blow-up of the plane, under which a line pulls back to a curve of
class (1, e).  Combinatorially nothing else happens: a line arrangement of
d lines with multiplicity counts t_k becomes an arrangement of d curves
with counts e * t_k, every singular point staying transversal. The
Harbourne constant is unchanged,

    H(X_e, pullback) = (d^2 e - e * sum r_p^2) / (s * e) = H(plane, lines),

because the class (1, e) has pairwise intersection h = e.  Pulled-back
curves avoid the section C0 (b = a*e), so the C0-disjoint bound applies.

Line arrangements are stored as count vectors only; the two built-ins are
the classical Klein arrangement of 21 lines (t3 = 28, t4 = 21) and the
Wiman arrangement of 45 lines (t3 = 120, t4 = 45, t5 = 36), both unusually
singular and therefore with unusually small Harbourne constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .arrangement import ArrangementProfile
from .errors import InputFormatError, ParameterRange
from .surface import NumClass, RuledSurface

__all__ = [
    "LineArrangement",
    "pullback",
    "klein",
    "wiman",
    "plane_harbourne_constant",
    "GALLERY_NAMES",
    "gallery_arrangement",
    "line_arrangement_from_json",
    "line_arrangement_to_json",
]


@dataclass(frozen=True)
class LineArrangement:
    """d lines in the plane with multiplicity counts t_k.

    Any two lines meet exactly once, so sum_k binom(k, 2) * t_k = binom(d, 2);
    construction rejects count vectors violating that.
    """

    d: int
    t: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"d must be positive, got {self.d}")
        clean: dict[int, int] = {}
        for k in sorted(self.t):
            count = self.t[k]
            if k < 2:
                raise ValueError(f"multiplicity keys must be >= 2, got {k}")
            if count < 0:
                raise ValueError(f"t[{k}] must be >= 0, got {count}")
            if count:
                clean[k] = count
        pair_total = sum(math.comb(k, 2) * c for k, c in clean.items())
        if pair_total != math.comb(self.d, 2):
            raise ValueError(
                f"pair count mismatch: sum binom(k,2)*t_k = {pair_total},"
                f" binom(d,2) = {math.comb(self.d, 2)}"
            )
        object.__setattr__(self, "t", clean)


def klein() -> LineArrangement:
    return LineArrangement(21, {3: 28, 4: 21})


def wiman() -> LineArrangement:
    return LineArrangement(45, {3: 120, 4: 45, 5: 36})


GALLERY_NAMES = ("klein", "wiman")


def gallery_arrangement(name: str) -> LineArrangement:
    if name == "klein":
        return klein()
    if name == "wiman":
        return wiman()
    raise ParameterRange(f"unknown built-in arrangement {name!r}; have {GALLERY_NAMES}")


def plane_harbourne_constant(arr: LineArrangement) -> Fraction:
    """H of the line arrangement in the plane: (d^2 - sum k^2 t_k) / (sum t_k)."""
    f0 = sum(arr.t.values())
    if f0 == 0:
        raise ParameterRange("line arrangement has no singular points")
    f2 = sum(k * k * c for k, c in arr.t.items())
    return Fraction(arr.d * arr.d - f2, f0)


def pullback(arr: LineArrangement, e: int) -> ArrangementProfile:
    """Pull a line arrangement back to the rational ruled surface X_e.

    Requires e >= 4, d >= 4 and no point on all lines, so the result always
    passes profile validation.  Disjointness from C0 is recorded; the
    four-curve hypothesis is not inferred from counts alone.
    """
    if e < 4:
        raise ParameterRange(f"pull-back bounds need e >= 4, got {e}")
    if arr.d < 4:
        raise ParameterRange(f"pull-back profile needs d >= 4, got {arr.d}")
    if any(k >= arr.d and c for k, c in arr.t.items()):
        raise ParameterRange("arrangement has a point common to all d lines")
    return ArrangementProfile(
        RuledSurface(genus=0, invariant_e=e),
        NumClass(1, e),
        arr.d,
        {k: e * c for k, c in arr.t.items()},
        c0_disjoint=True,
        a1_four_curve_flag=False,
    )


def line_arrangement_from_json(doc: object) -> LineArrangement:
    if not isinstance(doc, dict):
        raise InputFormatError("line arrangement document must be a JSON object")
    unknown = sorted(set(doc) - {"d", "t"})
    if unknown:
        raise InputFormatError(f"line arrangement has unknown keys: {unknown}")
    d = doc.get("d")
    if isinstance(d, bool) or not isinstance(d, int):
        raise InputFormatError("line arrangement 'd' must be a JSON integer")
    t_doc = doc.get("t")
    if not isinstance(t_doc, dict):
        raise InputFormatError("line arrangement 't' must be a JSON object")
    t: dict[int, int] = {}
    for key, value in t_doc.items():
        try:
            k = int(key, 10)
        except (TypeError, ValueError):
            raise InputFormatError(f"t key {key!r} is not an integer string") from None
        if isinstance(value, bool) or not isinstance(value, int):
            raise InputFormatError(f"t[{key}] must be a JSON integer")
        t[k] = value
    try:
        return LineArrangement(d, t)
    except ValueError as exc:
        raise InputFormatError(str(exc)) from None


def line_arrangement_to_json(arr: LineArrangement) -> dict:
    return {"d": arr.d, "t": {str(k): c for k, c in sorted(arr.t.items())}}
