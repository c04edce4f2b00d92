import json
import random
from fractions import Fraction

import pytest

from harbourne import (
    ArrangementProfile,
    EmptySingularLocus,
    InputFormatError,
    NumClass,
    ParameterRange,
    RuledSurface,
    ValidationFailed,
    generic_profile,
    harbourne_constant,
    klein,
    profile_from_json,
    profile_to_json,
    pullback,
    stats,
    validate_four_curve,
    validate_profile,
    wiman,
)
from harbourne.arrangement import _harbourne_from_counts
from harbourne.reports import Status

from conftest import random_valid_profile


def klein_profile(e=4):
    return pullback(klein(), e)


def test_stats_klein_pullback():
    st = stats(klein_profile(4))
    assert (st.f0, st.f1, st.f2) == (196, 672, 2352)
    assert st.h == 4
    assert st.sum_rp_sq == st.f2


def test_stats_empty_and_toy():
    s = RuledSurface(0, 4)
    empty = ArrangementProfile(s, NumClass(1, 4), 4, {})
    st = stats(empty)
    assert (st.f0, st.f1, st.f2) == (0, 0, 0)
    toy = ArrangementProfile(s, NumClass(1, 4), 4, {2: 6})
    st = stats(toy)
    assert (st.f0, st.f1, st.f2) == (6, 12, 24)


def test_stats_moment_inequalities():
    rng = random.Random(20240)
    for _ in range(200):
        st = stats(random_valid_profile(rng))
        assert st.f1 >= 2 * st.f0
        assert st.f2 >= 2 * st.f1


def test_validate_klein_pullback_passes():
    report = validate_profile(klein_profile(4))
    assert report.passed
    st = stats(klein_profile(4))
    assert st.f2 - st.f1 == 1680 == 4 * 21 * 20


def test_validate_rejects_top_multiplicity():
    s = RuledSurface(0, 4)
    p = ArrangementProfile(s, NumClass(1, 4), 4, {2: 18, 4: 2})
    report = validate_profile(p)
    assert report.check("t_d_zero").status is Status.FAIL


def test_validate_rejects_small_b():
    s = RuledSurface(0, 4)
    p = ArrangementProfile(s, NumClass(1, 3), 4, {2: 12})
    report = validate_profile(p)
    assert report.check("b_ge_ae").status is Status.FAIL


def test_validate_counting_identity_flips_on_perturbation():
    rng = random.Random(77)
    for _ in range(100):
        p = random_valid_profile(rng)
        assert validate_profile(p).check("counting_identity").status is Status.PASS
        k = rng.choice(sorted(p.t) + [rng.randint(2, p.d - 1)])
        t = dict(p.t)
        if rng.random() < 0.5 and t.get(k, 0) > 0:
            t[k] -= 1
        else:
            t[k] = t.get(k, 0) + 1
        perturbed = ArrangementProfile(p.surface, p.curve_class, p.d, t)
        assert validate_profile(perturbed).check("counting_identity").status is Status.FAIL


def test_validate_four_curve():
    s = RuledSurface(0, 4)
    a2 = ArrangementProfile(s, NumClass(2, 8), 4, {2: 2 * 6 * 16})
    assert validate_four_curve(a2).check("four_curve_condition").status is Status.PASS
    a1 = generic_profile(s, NumClass(1, 4), 4)
    assert (
        validate_four_curve(a1).check("four_curve_condition").status
        is Status.UNVERIFIABLE
    )
    flagged = a1.with_flags(a1_four_curve_flag=True)
    assert (
        validate_four_curve(flagged).check("four_curve_condition").status
        is Status.PASS
    )


def test_harbourne_klein_is_minus_three_for_all_e():
    for e in range(4, 11):
        assert harbourne_constant(klein_profile(e)) == -3


def test_harbourne_wiman():
    for e in range(4, 11):
        value = harbourne_constant(pullback(wiman(), e))
        assert value == Fraction(-225, 67)
        assert value == Fraction(-675, 201)


def test_harbourne_generic_d5():
    s = RuledSurface(0, 4)
    p = ArrangementProfile(s, NumClass(1, 4), 5, {2: 40})
    assert harbourne_constant(p) == Fraction(-3, 2) == Fraction(-2 * (5 - 2), 5 - 1)


def test_harbourne_requires_validity():
    s = RuledSurface(0, 4)
    with pytest.raises(ValidationFailed):
        harbourne_constant(ArrangementProfile(s, NumClass(1, 4), 4, {2: 5}))
    with pytest.raises(EmptySingularLocus):
        harbourne_constant(ArrangementProfile(s, NumClass(1, 4), 4, {}))


def test_harbourne_two_forms_agree():
    rng = random.Random(911)
    for _ in range(500):
        p = random_valid_profile(rng)
        st = stats(p)
        assert harbourne_constant(p) == Fraction(st.h * p.d - st.f1, st.f0)


def test_harbourne_scale_invariance():
    # simultaneous scaling of the pairwise intersection and all counts keeps
    # the constant: the mechanism behind pull-back invariance
    rng = random.Random(5150)
    for _ in range(200):
        p = random_valid_profile(rng)
        st = stats(p)
        m = rng.randint(2, 5)
        assert _harbourne_from_counts(st.h, p.d, st.f2, st.f0) == _harbourne_from_counts(
            m * st.h, p.d, m * st.f2, m * st.f0
        )


def test_generic_profile():
    s = RuledSurface(0, 4)
    p = generic_profile(s, NumClass(1, 4), 4)
    assert p.t == {2: 24}
    assert harbourne_constant(p) == Fraction(-4, 3)
    p10 = generic_profile(RuledSurface(2, 5), NumClass(2, 17), 10)
    assert harbourne_constant(p10) == Fraction(-16, 9)
    h = 2 * 2 * 17 - 4 * 5
    assert p10.t == {2: 45 * h}


def test_generic_profile_t2_is_six_h_at_d4():
    for a, b, e in [(1, 4, 4), (2, 9, 4), (1, 7, 5)]:
        p = generic_profile(RuledSurface(0, e), NumClass(a, b), 4)
        assert p.t[2] == 6 * (2 * a * b - a * a * e)


def test_generic_profile_preconditions():
    s = RuledSurface(0, 4)
    with pytest.raises(ParameterRange):
        generic_profile(s, NumClass(1, 4), 3)
    with pytest.raises(ParameterRange):
        generic_profile(s, NumClass(0, 4), 4)
    with pytest.raises(ParameterRange):
        generic_profile(s, NumClass(1, 3), 4)
    with pytest.raises(ParameterRange):
        generic_profile(RuledSurface(0, 3), NumClass(1, 3), 4)


def test_generic_profile_family_formula():
    for d in range(4, 101):
        for a, e, extra, g in [(1, 4, 0, 0), (2, 5, 3, 1), (3, 7, 1, 2)]:
            p = generic_profile(RuledSurface(g, e), NumClass(a, a * e + extra), d)
            assert validate_profile(p).passed
            assert harbourne_constant(p) == Fraction(-2 * (d - 2), d - 1)


def test_profile_normalizes_t():
    s = RuledSurface(0, 4)
    p = ArrangementProfile(s, NumClass(1, 4), 4, {2: 24, 3: 0})
    assert p.t == {2: 24}
    with pytest.raises(ValueError):
        ArrangementProfile(s, NumClass(1, 4), 4, {1: 1})
    with pytest.raises(ValueError):
        ArrangementProfile(s, NumClass(1, 4), 4, {2: -1})
    with pytest.raises(ValueError):
        ArrangementProfile(s, NumClass(1, 4), 0, {})


# --- JSON -------------------------------------------------------------------

KLEIN_DOC = {
    "surface": {"g": 0, "e": 4},
    "class": {"a": 1, "b": 4},
    "d": 21,
    "t": {"3": 112, "4": 84},
    "c0_disjoint": True,
    "a1_four_curve_flag": False,
}


def test_profile_json_roundtrip():
    p = profile_from_json(KLEIN_DOC)
    assert p == klein_profile(4)
    assert profile_from_json(profile_to_json(p)) == p
    assert json.dumps(profile_to_json(p), sort_keys=True) == json.dumps(
        profile_to_json(profile_from_json(profile_to_json(p))), sort_keys=True
    )


def test_profile_json_flags_default_false():
    doc = {k: v for k, v in KLEIN_DOC.items() if k not in ("c0_disjoint", "a1_four_curve_flag")}
    p = profile_from_json(doc)
    assert not p.c0_disjoint and not p.a1_four_curve_flag


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update({"extra": 1}),
        lambda d: d["surface"].update({"x": 1}),
        lambda d: d.update({"d": "21"}),
        lambda d: d.update({"d": True}),
        lambda d: d["t"].update({"two": 3}),
        lambda d: d["t"].update({"1": 3}),
        lambda d: d.update({"c0_disjoint": 1}),
        lambda d: d.pop("surface"),
        lambda d: d["surface"].pop("g"),
        lambda d: d["t"].update({"3": 1.5}),
    ],
)
def test_profile_json_rejects_bad_documents(mutate):
    doc = json.loads(json.dumps(KLEIN_DOC))
    mutate(doc)
    with pytest.raises(InputFormatError):
        profile_from_json(doc)
