"""Partitions, semistandard tableaux, and the two shape indices."""

from itertools import product
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mixedsdp.codes import ProblemSpec
from mixedsdp.tableaux import (
    build_shape_index_d0,
    build_shape_index_empty,
    column_weight,
    count_entries,
    partitions_up_to_height,
    semistandard_tableaux,
)


class TestPartitions:
    def test_direct_listing(self):
        assert partitions_up_to_height(3, 2) == [(3,), (2, 1)]

    def test_empty_partition(self):
        assert partitions_up_to_height(0, 2) == [()]

    def test_single_row(self):
        assert partitions_up_to_height(5, 1) == [(5,)]

    @given(st.integers(min_value=0, max_value=10), st.integers(min_value=1, max_value=4))
    @settings(max_examples=50, deadline=None)
    def test_shape_invariants(self, n, h):
        parts = partitions_up_to_height(n, h)
        assert len(set(parts)) == len(parts)
        for lam in parts:
            assert sum(lam) == n
            assert len(lam) <= h
            assert all(lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def enumerate_fillings(lam, m):
    """Oracle: filter all fillings by the two semistandard conditions."""
    cells = sum(lam)
    out = []
    for flat in product(range(1, m + 1), repeat=cells):
        rows = []
        k = 0
        for length in lam:
            rows.append(flat[k:k + length])
            k += length
        if any(r[i] > r[i + 1] for r in rows for i in range(len(r) - 1)):
            continue
        ok = True
        for r in range(1, len(lam)):
            if any(rows[r][i] <= rows[r - 1][i] for i in range(lam[r])):
                ok = False
        if ok:
            out.append(tuple(rows))
    return sorted(out, key=lambda t: tuple(x for row in t for x in row))


class TestSemistandardTableaux:
    def test_single_row_counts(self):
        for n in range(0, 8):
            assert len(semistandard_tableaux((n,) if n else (), 2)) == n + 1

    def test_21_by_enumeration(self):
        got = semistandard_tableaux((2, 1), 2)
        assert got == [((1, 1), (2,)), ((1, 2), (2,))]

    def test_column_of_three_with_two_letters(self):
        assert semistandard_tableaux((1, 1, 1), 2) == []

    def test_stars_and_bars(self):
        for m in (1, 2):
            for n in range(1, 13):
                assert len(semistandard_tableaux((n,), m)) == comb(n + m - 1, m - 1)

    def test_two_row_count(self):
        for a in range(1, 8):
            for b in range(1, a + 1):
                if a + b > 10:
                    continue
                assert len(semistandard_tableaux((a, b), 2)) == a - b + 1

    @pytest.mark.parametrize("lam,m", [((2,), 2), ((2, 1), 2), ((3, 2), 2), ((2,), 3)])
    def test_matches_filter_oracle(self, lam, m):
        assert semistandard_tableaux(lam, m) == enumerate_fillings(lam, m)


class TestShapeIndexD0:
    def test_111_shapes(self):
        spec = ProblemSpec(1, 1, 1)
        shapes = build_shape_index_d0(spec)
        assert {s.counts for s in shapes} == {(1, 1, 0), (1, 0, 1)}
        by_counts = {s.counts: s for s in shapes}
        s = by_counts[(1, 1, 0)]
        assert len(s.columns) == 4
        assert len(s.admissible) == 4  # d=1 keeps everything
        assert sorted(s.weights) == [0, 1, 1, 2]

    def test_112_weight_filter(self):
        spec = ProblemSpec(1, 1, 2)
        shapes = {s.counts: s for s in build_shape_index_d0(spec)}
        s = shapes[(1, 1, 0)]
        assert len(s.admissible) == 2  # weights 0 and 2 only
        kept_weights = sorted(column_weight(spec, t) for t in s.admissible)
        assert kept_weights == [0, 2]
        excluded = [t for t in s.columns if t not in s.admissible]
        assert all(column_weight(spec, t) == 1 for t in excluded)

    def test_weight_zero_column_always_kept(self):
        for d in (1, 2, 3, 4):
            spec = ProblemSpec(2, 2, d)
            shapes = build_shape_index_d0(spec)
            trivial = [s for s in shapes if s.counts == (2, 2, 0)
                       and s.lambdas == ((2,), (2,), ())]
            assert trivial, "trivial shape missing"
            weights = [column_weight(spec, t) for t in trivial[0].admissible]
            assert 0 in weights

    def test_w_prime_equals_w_at_d1(self):
        spec = ProblemSpec(2, 3, 1)
        for s in build_shape_index_d0(spec):
            assert s.admissible == s.columns

    def test_number_of_count_tuples(self):
        spec = ProblemSpec(2, 3, 1)
        counts = {s.counts for s in build_shape_index_d0(spec)}
        assert counts == {(2, l2, 3 - l2) for l2 in range(4)}

    def test_second_rows_are_all_twos(self):
        spec = ProblemSpec(4, 2, 1)
        for s in build_shape_index_d0(spec):
            for col in s.columns:
                for tab in col[:2]:
                    if len(tab) == 2:
                        assert set(tab[1]) == {2}

    def test_weight_formula(self):
        spec = ProblemSpec(2, 2, 1)
        for s in build_shape_index_d0(spec):
            for col in s.columns:
                w = spec.n2 + spec.n3 - count_entries(col[0], 1) - count_entries(col[1], 1)
                assert column_weight(spec, col) == w
                assert 0 <= w <= spec.length


class TestShapeIndexEmpty:
    def test_counts_11(self):
        assert len(build_shape_index_empty(ProblemSpec(1, 1, 1))) == 4

    def test_counts_25(self):
        assert len(build_shape_index_empty(ProblemSpec(2, 5, 1))) == 18

    @pytest.mark.parametrize("n2,n3", [(1, 1), (2, 3), (4, 2)])
    def test_exactly_one_augmented(self, n2, n3):
        shapes = build_shape_index_empty(ProblemSpec(n2, n3, 1))
        augmented = [s for s in shapes if s.augmented]
        assert len(augmented) == 1
        assert augmented[0].counts == (n2, 0, n3, 0)

    def test_split_constraints(self):
        spec = ProblemSpec(3, 2, 1)
        for s in build_shape_index_empty(spec):
            l1, l2, l3, l4 = s.counts
            assert l1 + l2 == spec.n2
            assert l3 + l4 == spec.n3
