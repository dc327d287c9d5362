import random

import pytest
from hypothesis import given, strategies as st

from schurkit.polynomials import MultiPoly, generator_product, monomial_symmetric, schur_poly
from schurkit.shapes import Partition, SkewShape, conjugate, contains, partitions
from schurkit.symfunc import (
    SignedPartition,
    SymFunc,
    basis_by_polynomial,
    basis_element,
    e_to_schur_table,
    h_to_schur_table,
    kostka,
    multiply,
    normalize_s,
    scalar,
    schur_expand,
    skew_schur,
)
from schurkit.tableaux import count_ssyt

s = SymFunc.schur


def hook_dimension(lam):
    """Number of standard tableaux by the hook length formula."""
    from math import factorial
    lt = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= row - j + lt[j] - i - 1
    return factorial(sum(lam)) // prod


class TestSymFunc:
    def test_text(self):
        assert str(s((2,)) + s((1, 1))) == "s[2] + s[1,1]"
        assert str(s((3, 1)) * -1) == "-1*s[3,1]"
        assert str(SymFunc({(3,): 1, (2, 1): -1, (1, 1, 1): 1})) == "s[3] - 1*s[2,1] + s[1,1,1]"
        assert str(SymFunc()) == "0"
        assert str(SymFunc({(2,): 3, (1, 1): -2})) == "3*s[2] - 2*s[1,1]"

    def test_json(self):
        f = SymFunc({(1, 1): 2, (2,): -1})
        data = f.to_json()
        assert data == {"terms": [{"lambda": [2], "coeff": -1}, {"lambda": [1, 1], "coeff": 2}]}
        assert SymFunc.from_json(data) == f

    def test_degree_and_zero(self):
        assert SymFunc().degree() is None and not SymFunc()
        assert (s((2,)) + s(())).degree() == 2
        assert s((1,)) - s((1,)) == SymFunc()

    def test_realize(self):
        assert (s((2,)) + s((1, 1))).realize(2) == generator_product("h", (1, 1), 2)


class TestNormalize:
    def test_examples(self):
        assert normalize_s((1, 2)) == SignedPartition(0)
        assert normalize_s((0, 4)) == SignedPartition(-1, Partition((3, 1)))
        assert normalize_s((3, 1)) == SignedPartition(1, Partition((3, 1)))

    def test_inconsistent(self):
        with pytest.raises(ValueError):
            SignedPartition(0, Partition((1,)))
        with pytest.raises(ValueError):
            SignedPartition(2, Partition((1,)))

    @pytest.mark.parametrize("lam", [p for d in range(11) for p in partitions(d)])
    def test_partitions_are_fixed(self, lam):
        assert normalize_s(lam) == SignedPartition(1, lam)

    @given(st.lists(st.integers(0, 5), max_size=4))
    def test_agrees_with_quotient(self, alpha):
        n = 4
        signed = normalize_s(alpha)
        if signed.sign == 0:
            assert schur_poly(alpha, n) == MultiPoly()
        else:
            assert schur_poly(alpha, n) == schur_poly(signed.partition, n) * signed.sign


class TestExpand:
    def test_examples(self):
        assert schur_expand(generator_product("h", (2,), 2), 2) == s((2,))
        assert schur_expand(generator_product("e", (2,), 2), 2) == s((1, 1))
        assert schur_expand(schur_poly((3, 1), 4), 4) == s((3, 1))

    def test_preconditions(self):
        with pytest.raises(ValueError):
            schur_expand(MultiPoly.variable(0, 2), 2)
        with pytest.raises(ValueError):
            schur_expand(generator_product("h", (3,), 3), 2)
        with pytest.raises(ValueError):
            schur_expand(generator_product("h", (2,), 2), 1)

    @given(st.dictionaries(st.sampled_from([p for d in range(5) for p in partitions(d)]), st.integers(-3, 3), max_size=4))
    def test_round_trip(self, coeffs):
        f = SymFunc(coeffs)
        assert schur_expand(f.realize(5), 5) == f


class TestBasis:
    def test_examples(self):
        assert basis_element("h", (1, 1)) == s((2,)) + s((1, 1))
        assert basis_element("e", (2,)) == s((1, 1))
        assert basis_element("s", (0, 4)) == s((3, 1)) * -1
        assert basis_element("p", (3,)) == s((3,)) - s((2, 1)) + s((1, 1, 1))
        assert basis_element("m", (2, 1)) == s((2, 1)) - s((1, 1, 1)) * 2

    def test_errors(self):
        with pytest.raises(ValueError):
            basis_element("q", (1,))
        with pytest.raises(ValueError):
            basis_element("p", (1, 0, 1))

    def test_order_of_index_is_irrelevant(self):
        for kind in "meh":
            assert basis_element(kind, (1, 3, 0, 2)) == basis_element(kind, (3, 2, 1))

    @pytest.mark.parametrize("kind", "mehp")
    @pytest.mark.parametrize("lam", [p for d in range(6) for p in partitions(d)])
    def test_matches_polynomial_expansion(self, kind, lam):
        assert basis_element(kind, lam) == basis_by_polynomial(kind, lam)

    @pytest.mark.parametrize("lam", [p for d in range(1, 5) for p in partitions(d)])
    def test_more_variables_change_nothing(self, lam):
        for kind in "mehp":
            assert basis_by_polynomial(kind, lam, lam.size + 2) == basis_element(kind, lam)

    @pytest.mark.parametrize("d", range(1, 9))
    def test_h_ones_counts_standard_tableaux(self, d):
        f = basis_element("h", (1,) * d)
        assert dict(f.terms) == {lam: hook_dimension(lam) for lam in partitions(d)}

    def test_degree_twelve_is_fast_enough(self):
        f = basis_element("h", (1,) * 12)
        assert f.coeff((3, 3, 3, 3)) == hook_dimension((3, 3, 3, 3))

    def test_products_of_generators(self):
        h1 = basis_element("h", (1,))
        assert h1 * h1 == basis_element("h", (1, 1))
        assert basis_element("p", (2,)) * basis_element("p", (1,)) == basis_element("p", (2, 1))
        assert basis_element("e", (2,)) * basis_element("h", (1,)) == s((2, 1)) + s((1, 1, 1))


class TestRing:
    def test_product_examples(self):
        assert s((1,)) * s((1,)) == s((2,)) + s((1, 1))
        assert s((2, 1)) * SymFunc.one() == s((2, 1))
        assert s((2, 1)) * 3 == SymFunc({(2, 1): 3})
        assert multiply(s((2, 1)), s((2, 1))) == SymFunc(
            {(4, 2): 1, (4, 1, 1): 1, (3, 3): 1, (3, 2, 1): 2, (3, 1, 1, 1): 1, (2, 2, 2): 1, (2, 2, 1, 1): 1}
        )

    def test_product_against_polynomials(self):
        f, g = s((2, 1)) + s((1,)) * 2, s((2,)) - s((1, 1))
        n = 5
        assert (f * g).realize(n) == f.realize(n) * g.realize(n)

    def test_ring_laws_on_a_sample(self):
        rng = random.Random(7)
        pool = [p for d in range(1, 4) for p in partitions(d)]
        for _ in range(6):
            kinds = [rng.choice("mehs") for _ in range(3)]
            f, g, h = (basis_element(k, rng.choice(pool)) for k in kinds)
            assert (f * g) * h == f * (g * h)
            assert f * g == g * f
            assert (f * g).degree() == f.degree() + g.degree()

    def test_scalar(self):
        assert scalar(s((3, 1)), s((3, 1))) == 1
        assert scalar(s((2,)), s((1, 1))) == 0
        assert scalar(basis_element("h", (2, 1)), s((2, 1))) == 1


class TestSkew:
    def test_examples(self):
        assert skew_schur((2, 1), (1,)) == s((2,)) + s((1, 1))
        assert skew_schur((3, 1), (3, 1)) == SymFunc.one()
        assert skew_schur((3, 1), ()) == s((3, 1))
        assert skew_schur((2,), (1, 1)) == SymFunc()
        assert skew_schur((3, 2, 1), (2, 1)) == s((3,)) + s((2, 1)) * 2 + s((1, 1, 1))

    @pytest.mark.parametrize(
        "lam", [p for d in range(8) for p in partitions(d)]
    )
    def test_adjointness(self, lam):
        for mu in (m for d in range(lam.size + 1) for m in partitions(d)):
            if lam.size - mu.size > 5:
                continue
            sk = skew_schur(lam, mu)
            for nu in partitions(lam.size - mu.size):
                assert scalar(s(mu) * s(nu), s(lam)) == scalar(s(nu), sk)


class TestKostka:
    def test_examples(self):
        assert kostka((2, 1), (), (1, 1, 1)) == 2
        assert kostka((4,), (), (4,)) == 1
        assert kostka((2, 1), (), (1, 1, 1), primed=True) == 2

    def test_tables(self):
        assert h_to_schur_table(2)[Partition((1, 1))] == {(2,): 1, (1, 1): 1}
        assert h_to_schur_table(1) == {(1,): {(1,): 1}}
        assert e_to_schur_table(3)[Partition((1, 1, 1))] == {(3,): 1, (2, 1): 2, (1, 1, 1): 1}
        with pytest.raises(ValueError):
            h_to_schur_table(-1)

    def test_table_rows_are_kostka_numbers(self):
        table = h_to_schur_table(4)
        for alpha, row in table.items():
            for lam in partitions(4):
                assert row.get(lam, 0) == kostka(lam, (), alpha)

    @pytest.mark.parametrize("lam", [p for d in range(1, 6) for p in partitions(d)])
    def test_against_tableau_counts(self, lam):
        for mu in (m for d in range(lam.size) for m in partitions(d) if contains(m, lam)):
            k = lam.size - mu.size
            for alpha in [(k,), (1,) * k, (0, k), tuple(range(k, 0, -1))[:2]]:
                if sum(alpha) != k:
                    continue
                assert kostka(lam, mu, alpha) == count_ssyt(SkewShape(lam, mu), alpha)
                assert kostka(lam, mu, alpha, primed=True) == kostka(conjugate(lam), conjugate(mu), alpha)
