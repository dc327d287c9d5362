import itertools

import pytest
from hypothesis import given, strategies as st

from schurkit.shapes import (
    BetaSequence,
    Composition,
    EdgeSequence,
    Partition,
    Permutation,
    SizeMismatchError,
    SkewShape,
    apply_permutation,
    beta_window,
    compositions,
    conjugate,
    contains,
    dominance_leq,
    edge_sequence,
    inversion_count,
    ones,
    parse_composition,
    parse_partition,
    parse_skew,
    partition_from_edges,
    partitions,
    ribbon_check,
    ribbon_height_by_diagram,
    sort_to_partition,
    strip_check,
)

partition_st = st.lists(st.integers(0, 7), max_size=7).map(lambda xs: Partition(sorted(xs, reverse=True)))
composition_st = st.lists(st.integers(0, 6), max_size=8).map(Composition)


def brute_inversions(seq):
    return sum(1 for i, j in itertools.combinations(range(len(seq)), 2) if seq[i] < seq[j])


def partition_count(d):
    # Euler's recurrence via a coin-change table, independent of partitions().
    table = [1] + [0] * d
    for part in range(1, d + 1):
        for total in range(part, d + 1):
            table[total] += table[total - part]
    return table[d]


class TestCompositions:
    def test_trailing_zeros_dropped(self):
        assert Composition((3, 0, 1, 0, 0)) == (3, 0, 1)
        assert Composition((0, 0)) == ()

    def test_index_past_end_is_zero(self):
        a = Composition((2, 1))
        assert a[1] == 1 and a[5] == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            Composition((1, -1))

    def test_partition_must_decrease(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_arithmetic(self):
        assert Composition((3, 1)) - Composition((1, 1)) == (2,)
        assert Composition((1,)) + Composition((0, 0, 2)) == (1, 0, 2)

    def test_padded(self):
        assert Composition((2,)).padded(3) == (2, 0, 0)
        with pytest.raises(ValueError):
            Composition((1, 1, 1)).padded(2)

    def test_ones(self):
        assert ones(3) == (1, 1, 1) and ones(0) == ()
        assert ones(4).is_binary() and not Partition((2,)).is_binary()


class TestSorting:
    def test_sorted_example(self):
        lam, _ = sort_to_partition((0, 5, 2, 0, 0, 1, 7, 0, 2))
        assert lam == (7, 5, 2, 2, 1)

    def test_unsigned(self):
        assert sort_to_partition((1, 2), signed=False) == (Partition((2, 1)), 0)

    def test_signs(self):
        assert sort_to_partition((1, 2))[1] == -1
        assert sort_to_partition((2, 1))[1] == 1
        assert sort_to_partition((1, 2, 3))[1] == -1

    @given(st.lists(st.integers(0, 9), max_size=12))
    def test_inversions_match_brute_force(self, xs):
        assert inversion_count(xs) == brute_inversions(xs)
        assert inversion_count(xs, descending=False) == brute_inversions([-x for x in xs])

    @given(st.permutations(range(6)))
    def test_permutation_sign_and_inverse(self, images):
        sigma = Permutation(tuple(images))
        assert sigma.sign() == (-1) ** brute_inversions([-x for x in images])
        assert all(sigma.inverse()(sigma(i)) == i for i in range(8))

    def test_permutation_constructors(self):
        assert Permutation.transposition(0, 2).images == (2, 1, 0)
        assert Permutation.cycle(0, 1, 2)(2) == 0
        assert Permutation.identity().sign() == 1
        assert Permutation.transposition(1, 3).sign() == -1
        with pytest.raises(ValueError):
            Permutation((0, 0))

    def test_apply_permutation(self):
        sigma = Permutation.cycle(0, 1)
        assert apply_permutation(sigma, (3, 1)) == (1, 3)

    @given(composition_st, st.permutations(range(8)))
    def test_orbit_has_same_sorted_form(self, alpha, images):
        moved = apply_permutation(Permutation(tuple(images)), alpha)
        assert moved.size == alpha.size
        assert sort_to_partition(moved)[0] == sort_to_partition(alpha)[0]


class TestPartitions:
    @pytest.mark.parametrize("d", range(13))
    def test_counts(self, d):
        ps = list(partitions(d))
        assert len(ps) == partition_count(d)
        assert ps == sorted(ps, reverse=True)

    def test_bounds(self):
        assert list(partitions(4, max_part=2)) == [(2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert list(partitions(4, max_len=2)) == [(4,), (3, 1), (2, 2)]

    def test_compositions_of_fixed_length(self):
        cs = list(compositions(2, 2))
        assert [c.padded(2) for c in cs] == [(0, 2), (1, 1), (2, 0)]

    def test_conjugate_example(self):
        assert conjugate((7, 5, 2, 2, 1)) == (5, 4, 2, 2, 2, 1, 1)
        assert Partition((3, 1)).t == (2, 1, 1)

    @given(partition_st)
    def test_conjugate_involution(self, lam):
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam).size == lam.size

    def test_dominance(self):
        assert dominance_leq((2, 2), (3, 1))
        assert not dominance_leq((3, 1), (2, 2))
        assert dominance_leq((1, 1, 1), (1, 1, 1))
        with pytest.raises(SizeMismatchError):
            dominance_leq((2,), (1,))

    @given(partition_st, partition_st)
    def test_dominance_reverses_under_conjugation(self, a, b):
        if a.size == b.size:
            assert dominance_leq(a, b) == dominance_leq(conjugate(b), conjugate(a))


class TestStrips:
    def test_worked_pairs(self):
        mu = (7, 5, 2, 2, 1)
        assert strip_check(mu, (8, 6, 3, 3, 1, 1, 1), "vertical")
        assert not strip_check(mu, (8, 6, 3, 3, 1, 1, 1), "horizontal")
        assert strip_check(mu, (11, 6, 4, 2, 1, 1), "horizontal")
        assert not strip_check(mu, (11, 6, 4, 2, 1, 1), "vertical")

    def test_not_contained(self):
        assert not contains((2,), (1, 1))
        assert not strip_check((2,), (1, 1), "vertical")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            strip_check((), (1,), "diagonal")

    @given(partition_st, partition_st)
    def test_horizontal_is_conjugate_vertical(self, mu, lam):
        assert strip_check(mu, lam, "horizontal") == strip_check(conjugate(mu), conjugate(lam), "vertical")

    @given(partition_st, partition_st)
    def test_strip_cells(self, mu, lam):
        if not contains(mu, lam):
            return
        cells = SkewShape(lam, mu).cells()
        rows = [i for i, _ in cells]
        cols = [j for _, j in cells]
        assert strip_check(mu, lam, "horizontal") == (len(set(cols)) == len(cols))
        assert strip_check(mu, lam, "vertical") == (len(set(rows)) == len(rows))


class TestBetaAndEdges:
    def test_beta_example(self):
        assert beta_window((7, 5, 2, 2, 1), 7).window == (6, 3, -1, -2, -4, -6, -7)

    def test_beta_tail(self):
        b = beta_window((2,))
        assert isinstance(b, BetaSequence)
        assert b[0] == 1 and b[3] == -4
        with pytest.raises(ValueError):
            beta_window((1, 1), 1)

    def test_edge_example(self):
        e = edge_sequence((7, 5, 2, 2, 1), -9, 9)
        assert e.to_text() == "@-9:1111010110001001000"

    def test_default_window(self):
        e = edge_sequence((7, 5, 2, 2, 1))
        assert (e.offset, e.stop - 1) == (-6, 8)
        with pytest.raises(ValueError):
            edge_sequence((7, 5, 2, 2, 1), -3, 9)

    def test_empty_partition(self):
        e = edge_sequence(())
        assert e.to_text() == "@-1:100" and partition_from_edges(e) == ()

    def test_parse(self):
        e = EdgeSequence.parse("@-9:1111010110001001000")
        assert partition_from_edges(e) == (7, 5, 2, 2, 1)
        with pytest.raises(ValueError):
            EdgeSequence.parse("-9:11")
        with pytest.raises(ValueError):
            EdgeSequence(0, "102")

    def test_charge_rejects_shifted_word(self):
        with pytest.raises(ValueError):
            partition_from_edges(EdgeSequence(0, "10"))

    @given(partition_st, st.integers(0, 4), st.integers(0, 4))
    def test_round_trip_any_window(self, lam, extra_lo, extra_hi):
        e = edge_sequence(lam, -len(lam) - 1 - extra_lo, lam[0] + 1 + extra_hi)
        assert e.charge() == 0
        assert partition_from_edges(EdgeSequence.parse(e.to_text())) == lam

    @given(partition_st)
    def test_ones_are_beta_values(self, lam):
        e = edge_sequence(lam)
        beta = beta_window(lam, -e.offset).window
        assert e.ones() == [b for b in beta if b >= e.offset]


class TestRibbons:
    def test_worked_ribbon(self):
        mu, lam = (7, 5, 2, 2, 1), (7, 6, 6, 3, 3, 2)
        assert ribbon_check(mu, lam, 10) == 4
        assert ribbon_height_by_diagram(mu, lam, 10) == 4
        assert sorted(SkewShape(lam, mu).cells()) == sorted(
            [(5, 0), (5, 1), (4, 1), (4, 2), (3, 2), (2, 2), (2, 3), (2, 4), (2, 5), (1, 5)]
        )

    def test_wrong_size(self):
        assert ribbon_check((1,), (2, 2), 2) is None
        assert ribbon_height_by_diagram((1,), (2, 2), 2) is None

    def test_disconnected(self):
        # (2,1)/(1): two cells on diagonals -1 and 1
        assert ribbon_check((1,), (2, 1), 2) is None

    def test_single_cells(self):
        assert ribbon_check((), (1,), 1) == 0
        assert ribbon_check((), (1, 1), 2) == 1

    def test_bad_length(self):
        with pytest.raises(ValueError):
            ribbon_check((), (1,), 0)

    @given(partition_st, partition_st, st.integers(1, 8))
    def test_two_definitions_agree(self, mu, lam, k):
        assert ribbon_check(mu, lam, k) == ribbon_height_by_diagram(mu, lam, k)


class TestParsing:
    def test_skew(self):
        s = parse_skew("9,8,5,5,3/4,1")
        assert s.outer == (9, 8, 5, 5, 3) and s.inner == (4, 1) and s.size == 25
        assert s.to_text() == "9,8,5,5,3/4,1"
        assert parse_skew("3,1").to_text() == "3,1"

    def test_skew_not_contained(self):
        with pytest.raises(ValueError):
            parse_skew("2/3")

    def test_bad_text(self):
        with pytest.raises(ValueError):
            parse_composition("1,a")
        with pytest.raises(ValueError):
            parse_partition("1,2")
        assert parse_composition("") == ()

    def test_transpose(self):
        assert SkewShape((3, 1), (1,)).transpose() == SkewShape((2, 1, 1), (1,))
