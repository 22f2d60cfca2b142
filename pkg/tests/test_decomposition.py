import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import PROPERTY_CASES, ideals, squarefree_ideals

from ntfideals.decomposition import (
    IrreducibleComponent,
    alexander_dual,
    ass_by_witness_search,
    associated_primes,
    colon_witness,
    embedded_primes,
    irreducible_decomposition,
    irreducible_decomposition_split,
    minimal_primes,
    symbolic_power,
    symbolic_power_from_components,
)
from ntfideals.monomial import InputError, MonomialIdeal, PrimeSupport, colon, intersect_all, localization, power

EMBEDDED = MonomialIdeal(3, [(0, 4, 0), (1, 3, 0), (3, 1, 0), (4, 0, 1)])
PENTAGON = MonomialIdeal(5, [(1, 1, 1, 0, 0), (0, 1, 1, 1, 0), (0, 0, 1, 1, 1), (1, 0, 0, 1, 1), (1, 1, 0, 0, 1)])


def primes(*supports, n=3):
    return tuple(sorted(PrimeSupport(n, s) for s in supports))


def test_embedded_prime_ideal_decomposition():
    expected = {
        IrreducibleComponent(((1, 1), (2, 4))),
        IrreducibleComponent(((1, 3), (2, 3))),
        IrreducibleComponent(((1, 4), (2, 1))),
        IrreducibleComponent(((2, 1), (3, 1))),
    }
    assert set(irreducible_decomposition(EMBEDDED)) == expected
    assert set(irreducible_decomposition_split(EMBEDDED)) == expected
    assert associated_primes(EMBEDDED) == primes((1, 2), (2, 3))
    assert embedded_primes(power(EMBEDDED, 2)) == primes((1, 2, 3))


def test_component_rendering():
    c = IrreducibleComponent(((2, 4), (1, 1)))
    assert str(c) == "(x1,x2^4)"
    assert c.to_json() == [{"var": 1, "exp": 1}, {"var": 2, "exp": 4}]
    with pytest.raises(InputError):
        IrreducibleComponent(((1, 0),))


def test_decomposition_needs_proper_ideal():
    with pytest.raises(InputError):
        irreducible_decomposition(MonomialIdeal.unit(2))
    with pytest.raises(InputError):
        irreducible_decomposition(MonomialIdeal.zero(2))


def test_pentagon_dual():
    dual = alexander_dual(PENTAGON)
    assert dual == MonomialIdeal(5, [(0, 0, 1, 0, 1), (0, 1, 0, 0, 1), (0, 1, 0, 1, 0), (1, 0, 0, 1, 0), (1, 0, 1, 0, 0)])
    assert alexander_dual(dual) == PENTAGON


def test_dual_rejects_non_squarefree():
    with pytest.raises(InputError):
        alexander_dual(EMBEDDED)


def test_colon_witness():
    sq = power(EMBEDDED, 2)
    v = colon_witness(sq, PrimeSupport(3, (1, 2, 3)))
    assert colon(sq, v) == PrimeSupport(3, (1, 2, 3)).ideal()
    assert colon_witness(EMBEDDED, PrimeSupport(3, (1, 2, 3))) is None


def test_symbolic_power_of_embedded_prime_ideal():
    # the embedded prime is removed: I^(2) is the intersection of the minimal-prime components
    sym = symbolic_power(EMBEDDED, 2)
    assert sym == symbolic_power_from_components(EMBEDDED, 2)
    assert power(EMBEDDED, 2) <= sym and sym != power(EMBEDDED, 2)


@settings(max_examples=PROPERTY_CASES)
@given(ideals(n_min=1, n_max=4, max_exp=4, max_gens=5))
def test_two_decomposition_routes_agree(ideal):
    assert irreducible_decomposition(ideal) == irreducible_decomposition_split(ideal)


@settings(max_examples=PROPERTY_CASES)
@given(squarefree_ideals(n_min=2, n_max=6, max_gens=6))
def test_squarefree_ass_matches_witness_oracle_and_min(ideal):
    ass = associated_primes(ideal)
    assert ass == ass_by_witness_search(ideal)
    assert ass == minimal_primes(ideal)


@settings(max_examples=PROPERTY_CASES)
@given(ideals(n_min=2, n_max=4, max_exp=3, max_gens=4), st.data())
def test_localization_law(ideal, data):
    q = PrimeSupport(ideal.n, data.draw(st.sets(st.integers(1, ideal.n), min_size=1)))
    ell = data.draw(st.integers(1, 2))
    loc = localization(ideal, q).padded
    expected = tuple(p for p in associated_primes(power(ideal, ell)) if p.issubset(q))
    got = () if not loc.is_proper() else associated_primes(power(loc, ell))
    assert got == expected


@settings(max_examples=PROPERTY_CASES)
@given(ideals(n_min=2, n_max=3, max_exp=3, max_gens=4), st.integers(1, 3))
def test_symbolic_power_contains_power_and_routes_agree(ideal, k):
    sym = symbolic_power(ideal, k)
    assert power(ideal, k) <= sym
    assert sym == symbolic_power_from_components(ideal, k)


@settings(max_examples=PROPERTY_CASES)
@given(ideals(n_min=1, n_max=4, max_exp=3, max_gens=4))
def test_colon_witness_for_every_associated_prime(ideal):
    for p in associated_primes(ideal):
        v = colon_witness(ideal, p)
        assert v is not None and colon(ideal, v) == p.ideal()


def test_minimal_primes_are_minimal_supports():
    ideal = MonomialIdeal(3, [(1, 1, 0), (0, 1, 1)])
    assert minimal_primes(ideal) == primes((1, 3), (2,))
    assert intersect_all([p.ideal() for p in minimal_primes(ideal)], 3) == ideal
