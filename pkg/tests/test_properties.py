import itertools
import random

import pytest
from hypothesis import given, settings

from conftest import squarefree_ideals

from ntfideals.monomial import InputError, MonomialIdeal, PrimeSupport
from ntfideals.properties import (
    AssProfile,
    ass_of_powers,
    intersection_type_ideal,
    is_nearly_ntf_up_to,
    is_ntf_up_to,
    localization_criterion_check,
    nearly_ntf_verdict,
    persistence_checks,
    random_squarefree_ideal,
    search_nearly_ntf_persistence,
)

EMBEDDED = MonomialIdeal(3, [(0, 4, 0), (1, 3, 0), (3, 1, 0), (4, 0, 1)])
TRIANGLE = MonomialIdeal(3, [(1, 1, 0), (0, 1, 1), (1, 0, 1)])


def P(*vs, n=3):
    return PrimeSupport(n, vs)


def test_embedded_prime_ideal_reports():
    ntf = is_ntf_up_to(EMBEDDED, 3)
    assert ntf.verdict.kind == "fails" and ntf.verdict.power == 2
    assert ntf.verdict.witnesses == (P(1, 2, 3),)
    near = is_nearly_ntf_up_to(EMBEDDED, 3)
    assert near.verdict.kind == "nearly_ntf"
    assert near.verdict.prime == P(1, 2, 3) and near.verdict.threshold == 1
    assert "up to K=3" in near.describe()
    js = near.to_json()
    assert js["verdict"] == {"kind": "nearly_ntf", "prime": [1, 2, 3], "threshold": 1}


def test_stop_early_truncates_profile():
    rep = is_ntf_up_to(TRIANGLE, 4, stop_early=True)
    assert rep.verdict.kind == "fails" and rep.profile.bound == 2


def test_symbolic_cross_check_recorded():
    rep = is_ntf_up_to(TRIANGLE, 3)
    assert rep.symbolic_equal == {1: True, 2: False, 3: False}


def test_unit_ideal_is_trivially_ntf():
    assert is_ntf_up_to(MonomialIdeal.unit(2), 3).verdict.kind == "ntf"


def test_bound_validation():
    with pytest.raises(InputError):
        is_ntf_up_to(TRIANGLE, 0)
    with pytest.raises(InputError):
        persistence_checks(TRIANGLE, 1)


def test_verdict_logic_on_synthetic_profiles():
    mins = (P(1), P(2))
    clean = AssProfile({1: mins, 2: mins, 3: mins})
    assert nearly_ntf_verdict(clean, mins).kind == "nearly_ntf"
    assert nearly_ntf_verdict(clean, mins).prime is None
    one = AssProfile({1: mins, 2: mins + (P(1, 2),), 3: mins + (P(1, 2),)})
    v = nearly_ntf_verdict(one, mins)
    assert (v.kind, v.prime, v.threshold) == ("nearly_ntf", P(1, 2), 1)
    two = AssProfile({1: mins, 2: mins + (P(1, 2),), 3: mins + (P(1, 3),)})
    v = nearly_ntf_verdict(two, mins)
    assert v.kind == "fails" and v.power == 3 and set(v.witnesses) == {P(1, 2), P(1, 3)}
    embedded = AssProfile({1: mins + (P(1, 2),), 2: mins + (P(1, 2),)})
    assert nearly_ntf_verdict(embedded, mins).kind == "fails"


def test_persistence_of_embedded_prime_ideal():
    rep = persistence_checks(EMBEDDED, 3)
    assert rep.persistence and not rep.strong and not rep.symbolic_strong
    assert rep.first_violation == 1


def test_persistence_of_triangle():
    rep = persistence_checks(TRIANGLE, 3)
    assert rep.persistence and rep.strong


def test_intersection_type_ideal():
    assert intersection_type_ideal((1, 2, 1)) == MonomialIdeal(3, [(0, 1, 2), (1, 0, 1), (2, 1, 0)])


@pytest.mark.parametrize("degrees", [d for n in (2, 3, 4) for d in itertools.product((1, 2), repeat=n)])
def test_intersection_type_family_is_nearly_ntf(degrees):
    ideal = intersection_type_ideal(degrees)
    assert is_nearly_ntf_up_to(ideal, 3).verdict.kind in ("ntf", "nearly_ntf")


def test_localization_criterion_on_intersection_type():
    rep = localization_criterion_check(intersection_type_ideal((1, 2, 1)), 3)
    assert rep.precondition and rep.predicted_nearly_ntf and rep.consistent


def test_localization_criterion_precondition():
    # (x1^2, x1*x2) has the embedded prime (x1,x2) already at the first power
    rep = localization_criterion_check(MonomialIdeal(2, [(2, 0), (1, 1)]), 2)
    assert not rep.precondition and rep.consistent


def test_random_squarefree_ideal_is_deterministic():
    a = random_squarefree_ideal(random.Random(3), 5)
    b = random_squarefree_ideal(random.Random(3), 5)
    assert a == b and a.is_squarefree()


def test_search_harness_runs():
    # the harness only reports what it finds; nothing is asserted about existence
    found = search_nearly_ntf_persistence(30, n=4, bound=3, seed=1)
    for ideal, near, pers in found:
        assert near.verdict.kind == "nearly_ntf"
        assert not (pers.persistence and pers.strong)


@settings(max_examples=100)
@given(squarefree_ideals(n_min=2, n_max=5, max_gens=5))
def test_fails_verdict_persists_when_bound_grows(ideal):
    small = is_nearly_ntf_up_to(ideal, 2)
    if small.verdict.kind == "fails":
        assert is_nearly_ntf_up_to(ideal, 3).verdict.kind == "fails"


@settings(max_examples=100)
@given(squarefree_ideals(n_min=2, n_max=5, max_gens=5))
def test_strong_persistence_implies_persistence(ideal):
    rep = persistence_checks(ideal, 3)
    if rep.strong:
        assert rep.persistence


@settings(max_examples=100)
@given(squarefree_ideals(n_min=2, n_max=5, max_gens=5))
def test_localization_criterion_never_contradicted(ideal):
    assert localization_criterion_check(ideal, 2).consistent
