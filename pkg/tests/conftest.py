"""Shared generators for randomized tests.

Profiles are generated directly against the incidence double-count identity
(so they pass validation by construction); incidence structures start from
the canonical generic realization and are randomly merged in a way that
provably preserves constant pairwise co-occurrence.  Everything is driven
by seeded ``random.Random`` instances, with seeds visible in test ids.
"""

from __future__ import annotations

import random

from harbourne import ArrangementProfile, IncidenceStructure, NumClass, RuledSurface
from harbourne.incidence import realize_generic


def random_valid_profile(
    rng: random.Random,
    *,
    a_range=(1, 4),
    e_range=(4, 8),
    g_range=(0, 3),
    d_range=(4, 12),
    b_extra=(0, 6),
    max_mult: int | None = None,
) -> ArrangementProfile:
    """A profile passing validation: t is sampled to hit the double count.

    The target sum_k k(k-1) t_k = h*d*(d-1) is always even and k = 2
    contributes 2, so the greedy fill below always terminates exactly.
    """
    a = rng.randint(*a_range)
    e = rng.randint(*e_range)
    g = rng.randint(*g_range)
    d = rng.randint(*d_range)
    b = a * e + rng.randint(*b_extra)
    h = 2 * a * b - a * a * e
    remaining = h * d * (d - 1)
    kmax = min(d - 1, max_mult) if max_mult else d - 1
    t: dict[int, int] = {}
    while remaining > 0:
        k = rng.randint(2, kmax)
        if k * (k - 1) > remaining:
            k = 2
        t[k] = t.get(k, 0) + 1
        remaining -= k * (k - 1)
    return ArrangementProfile(RuledSurface(g, e), NumClass(a, b), d, t)


def merged_structure(
    d: int,
    h: int,
    rng: random.Random,
    merges: int = 6,
    max_size: int | None = None,
) -> IncidenceStructure:
    """Randomly merged generic structure with co-occurrence h preserved.

    A merge unites two points with disjoint curve sets and deletes one pure
    pair-point for every cross pair, so every pair of curves keeps exactly h
    common points.  Merges that would need a missing pair-point, overlap, or
    create a point on all d curves are rejected.
    """
    points = list(realize_generic(d, h).points)
    for _ in range(merges):
        i1, i2 = rng.sample(range(len(points)), 2)
        s1, s2 = points[i1], points[i2]
        if s1 & s2:
            continue
        union = s1 | s2
        if len(union) >= d or (max_size and len(union) > max_size):
            continue
        used = {i1, i2}
        deletable = True
        for x in sorted(s1):
            for y in sorted(s2):
                pair = frozenset((x, y))
                found = next(
                    (i for i, pt in enumerate(points) if i not in used and pt == pair),
                    None,
                )
                if found is None:
                    deletable = False
                    break
                used.add(found)
            if not deletable:
                break
        if not deletable:
            continue
        points = [pt for i, pt in enumerate(points) if i not in used]
        points.append(union)
    return IncidenceStructure(d, tuple(points))
