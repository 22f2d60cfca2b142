import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import PROPERTY_CASES, ideals, monomials_in_box
from hypothesis import settings

from ntfideals.monomial import (
    InputError,
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    colon,
    deletion,
    embed,
    intersect,
    intersect_all,
    localization,
    minimal_exponents,
    minimalize,
    multiply,
    parse_monomial,
    power,
    radical,
    saturation,
    strip_common_factor,
)


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def in_gens(e, gens):
    return any(divides(g, e) for g in gens)


def box(*ideals_, scale=1):
    n = ideals_[0].n
    top = [0] * n
    for ideal in ideals_:
        for e in ideal.exps:
            top = [max(a, b) for a, b in zip(top, e)]
    return monomials_in_box([scale * t + 1 for t in top])


EMBEDDED = MonomialIdeal(3, [(0, 4, 0), (1, 3, 0), (3, 1, 0), (4, 0, 1)])


class TestMonomial:
    def test_str_and_parse(self):
        m = Monomial((4, 0, 1))
        assert str(m) == "x1^4*x3"
        assert parse_monomial("x1^4*x3", 3) == m
        assert str(Monomial.one(2)) == "1"
        assert parse_monomial("1", 2) == Monomial.one(2)

    def test_arithmetic(self):
        a, b = Monomial((1, 2, 0)), Monomial((0, 1, 3))
        assert a * b == Monomial((1, 3, 3))
        assert a.lcm(b) == Monomial((1, 2, 3))
        assert a.gcd(b) == Monomial((0, 1, 0))
        assert (a * b) / b == a
        assert a ** 3 == Monomial((3, 6, 0))
        with pytest.raises(InputError):
            a / b

    def test_properties(self):
        m = Monomial.from_support([1, 3], 4)
        assert m.exponents == (1, 0, 1, 0)
        assert m.is_squarefree() and m.support == (1, 3) and m.degree == 2
        assert Monomial((0, 5)).is_pure_power()

    @pytest.mark.parametrize("text, message", [
        ("x0", "outside"), ("x4", "outside"), ("x1^", "malformed"), ("y2", "malformed"), ("", "empty"),
    ])
    def test_parse_errors(self, text, message):
        with pytest.raises(InputError, match=message):
            parse_monomial(text, 3)


class TestIdeal:
    def test_canonical_order(self):
        assert EMBEDDED.to_json() == {"vars": 3, "gens": [[0, 4, 0], [1, 3, 0], [3, 1, 0], [4, 0, 1]]}
        assert EMBEDDED.to_text() == "vars=3; x2^4, x1*x2^3, x1^3*x2, x1^4*x3"

    def test_minimalization(self):
        assert MonomialIdeal(2, [(1, 0), (2, 0)]) == MonomialIdeal(2, [(1, 0)])
        assert MonomialIdeal(2, [(1, 1), (1, 0), (0, 3)]).exps == ((0, 3), (1, 0))

    def test_zero_and_unit(self):
        z, u = MonomialIdeal.zero(3), MonomialIdeal.unit(3)
        assert z.is_zero() and u.is_unit() and not z.is_proper() and not u.is_proper()
        assert power(EMBEDDED, 0).is_unit()
        assert intersect(EMBEDDED, u) == EMBEDDED
        assert (EMBEDDED + z) == EMBEDDED

    def test_predicates(self):
        assert MonomialIdeal(3, [(1, 1, 0), (0, 1, 1)]).is_squarefree()
        assert EMBEDDED.is_equigenerated() is False
        assert EMBEDDED.support() == (1, 2, 3)
        assert EMBEDDED.max_exponents() == (4, 4, 1)

    def test_radical_and_saturation(self):
        assert radical(EMBEDDED) == MonomialIdeal(3, [(0, 1, 0), (1, 0, 1)])
        assert saturation(EMBEDDED, Monomial((0, 0, 1))) == MonomialIdeal(3, [(0, 4, 0), (1, 3, 0), (3, 1, 0), (4, 0, 0)])

    def test_deletion_and_localization(self):
        ideal = MonomialIdeal(3, [(1, 1, 0), (0, 1, 1), (2, 0, 0)])
        assert deletion(ideal, 1) == MonomialIdeal(3, [(0, 1, 1)])
        # x1^2 becomes 1, so the localization at (x2,x3) is the unit ideal
        assert localization(ideal, PrimeSupport(3, (2, 3))).padded.is_unit()
        loc = localization(ideal, PrimeSupport(3, (1, 3)))
        assert loc.padded == MonomialIdeal(3, [(1, 0, 0), (0, 0, 1)])
        assert loc.restricted == MonomialIdeal(2, [(1, 0), (0, 1)])
        assert loc.variables == (1, 3)

    def test_strip_common_factor(self):
        h, rest = strip_common_factor(MonomialIdeal(3, [(1, 1, 0), (1, 0, 2)]))
        assert h == Monomial((1, 0, 0))
        assert rest == MonomialIdeal(3, [(0, 1, 0), (0, 0, 2)])

    def test_embed(self):
        ideal = MonomialIdeal(2, [(1, 1)])
        assert embed(ideal, 4, [2, 4]) == MonomialIdeal(4, [(0, 1, 0, 1)])

    def test_colon_by_zero_ideal_rejected(self):
        with pytest.raises(InputError):
            colon(EMBEDDED, MonomialIdeal.zero(3))

    def test_large_exponents_do_not_overflow(self):
        big = 2 ** 70
        ideal = MonomialIdeal(2, [(big, 0), (0, big)])
        assert power(ideal, 2).exps == ((0, 2 * big), (big, big), (2 * big, 0))

    def test_numpy_path_matches_python_path(self):
        rng = __import__("random").Random(5)
        gens = [tuple(rng.randint(0, 4) for _ in range(4)) for _ in range(300)]
        expected = sorted(g for g in set(gens) if not any(h != g and divides(h, g) for h in gens))
        assert list(minimal_exponents(gens, 4)) == expected


@settings(max_examples=PROPERTY_CASES)
@given(ideals())
def test_minimalize_idempotent_and_equality_is_mutual_membership(ideal):
    again = minimalize(ideal.exps, ideal.n)
    assert again == ideal
    assert all(e in ideal for e in again.exps) and all(e in again for e in ideal.exps)


@settings(max_examples=PROPERTY_CASES)
@given(st.data())
def test_operations_agree_with_box_oracle(data):
    a = data.draw(ideals(n_min=2, n_max=3, max_exp=3, max_gens=3))
    b = data.draw(ideals(n_min=a.n, n_max=a.n, max_exp=3, max_gens=3))
    v = data.draw(st.tuples(*[st.integers(0, 3)] * a.n))
    both = intersect(a, b)
    prod = multiply(a, b)
    col = colon(a, v)
    for e in box(a, b, scale=2):
        assert (e in both) == (in_gens(e, a.exps) and in_gens(e, b.exps))
        sums = [tuple(x + y for x, y in zip(g, h)) for g in a.exps for h in b.exps]
        assert (e in prod) == in_gens(e, sums)
        assert (e in col) == in_gens(tuple(x + y for x, y in zip(e, v)), a.exps)


@settings(max_examples=PROPERTY_CASES)
@given(ideals(n_min=1, n_max=3, max_exp=2, max_gens=3), st.integers(1, 3))
def test_power_agrees_with_products_of_generators(ideal, k):
    products = [tuple(map(sum, zip(*combo))) for combo in itertools.combinations_with_replacement(ideal.exps, k)]
    pw = power(ideal, k)
    for e in box(ideal, scale=k):
        assert (e in pw) == in_gens(e, products)


@settings(max_examples=PROPERTY_CASES)
@given(ideals(n_min=2, n_max=4, max_exp=3), st.data())
def test_localization_is_transitive(ideal, data):
    p_vars = data.draw(st.sets(st.integers(1, ideal.n), min_size=1))
    q_vars = data.draw(st.sets(st.sampled_from(sorted(p_vars))))
    p, q = PrimeSupport(ideal.n, p_vars), PrimeSupport(ideal.n, q_vars)
    twice = localization(localization(ideal, p).padded, q).padded
    assert twice == localization(ideal, q).padded


@settings(max_examples=PROPERTY_CASES)
@given(ideals(n_min=2, n_max=4, max_exp=3, max_gens=5), st.data())
def test_deletion_and_localization_commute_with_minimalize(ideal, data):
    raw = list(ideal.exps) + [tuple(a + 1 for a in e) for e in ideal.exps]
    i = data.draw(st.integers(1, ideal.n))
    p = PrimeSupport(ideal.n, data.draw(st.sets(st.integers(1, ideal.n), min_size=1)))
    unreduced = MonomialIdeal._canonical(ideal.n, tuple(sorted(set(raw))))
    assert deletion(unreduced, i) == deletion(ideal, i)
    assert localization(unreduced, p).padded == localization(ideal, p).padded


def test_intersect_all_empty_is_unit():
    assert intersect_all([], 3).is_unit()
