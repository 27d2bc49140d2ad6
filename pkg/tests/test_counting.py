"""Counting routes: closed form vs enumeration oracle vs recurrence."""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parkseq.counting import (
    CountReport,
    EnumerationBudgetError,
    IndexSet,
    count_by_enumeration,
    count_by_formula,
    count_no_trailer,
    count_report,
    partitions_into_two,
    subvector,
    verify_recurrence,
)

sizes_vectors = st.lists(st.integers(1, 3), max_size=4).map(tuple)


class TestFormula:
    def test_unit_sizes_z1_gives_classic_count(self):
        assert count_by_formula((1, 1, 1), 1) == 16  # (3+1)^(3-1)

    @pytest.mark.parametrize("z", [1, 2, 7])
    @pytest.mark.parametrize("y", [1, 3, 10])
    def test_single_car_counts_z(self, y, z):
        assert count_by_formula((y,), z) == z

    def test_worked_example_product(self):
        # 4 * 8 * 9, confirmed below against the full 8^3 enumeration
        assert count_by_formula((2, 2, 1), 4) == 288
        assert count_by_enumeration((2, 2, 1), 4) == 288

    @pytest.mark.parametrize("z", [1, 2, 3, 9])
    def test_no_cars_counts_one_not_z(self, z):
        assert count_by_formula((), z) == 1

    @given(st.lists(st.integers(1, 3), max_size=3).map(tuple), st.integers(1, 3), st.integers(1, 3), st.integers(1, 4))
    def test_last_size_never_enters(self, prefix, a, b, z):
        assert count_by_formula(prefix + (a,), z) == count_by_formula(prefix + (b,), z)

    def test_rejects_bad_z(self):
        with pytest.raises(ValueError):
            count_by_formula((1,), 0)


class TestNoTrailer:
    def test_unit_sizes_reproduce_classic_sequence(self):
        expected = [1, 1, 3, 16, 125, 1296]  # (n+1)^(n-1)
        for n, want in enumerate(expected):
            assert count_no_trailer((1,) * n) == want

    def test_single_car_is_one(self):
        assert count_no_trailer((5,)) == 1 == count_by_formula((5,), 1)

    def test_two_cars_match_enumeration(self):
        # 3-spot lot, 9 preference pairs, exactly 4 park
        assert count_no_trailer((2, 1)) == 4
        assert count_by_enumeration((2, 1), 1) == 4

    @given(sizes_vectors)
    def test_equals_formula_at_z1(self, sizes):
        assert count_no_trailer(sizes) == count_by_formula(sizes, 1)


class TestEnumeration:
    @pytest.mark.parametrize("z", [1, 2, 5])
    def test_empty_tuple_parks(self, z):
        assert count_by_enumeration((), z) == 1

    def test_unit_sizes_z1(self):
        assert count_by_enumeration((1, 1, 1), 1) == 16

    def test_scans_whole_preference_space(self):
        report = count_report((2, 1), 2)
        m = 2 - 1 + 3
        assert report.tuples_scanned == m**2
        assert report.match

    def test_budget_guard_reports_sizes(self):
        with pytest.raises(EnumerationBudgetError) as err:
            count_by_enumeration((2, 2, 1), 4, budget=100)
        assert err.value.m == 8
        assert err.value.n == 3
        assert err.value.total == 512
        assert err.value.budget == 100

    def test_budget_none_lifts_guard(self):
        assert count_by_enumeration((2, 2, 1), 4, budget=None) == 288

    def test_sharded_enumeration_matches_serial(self):
        serial = count_report((2, 2, 1), 4, workers=1)
        sharded = count_report((2, 2, 1), 4, workers=3)
        assert sharded == serial

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(1, 3), max_size=3).map(tuple), st.integers(1, 3))
    def test_oracle_agrees_with_formula(self, sizes, z):
        assert count_by_enumeration(sizes, z) == count_by_formula(sizes, z)

    @pytest.mark.parametrize("prefix,z", [((), 2), ((2,), 1), ((1, 3), 4)])
    def test_last_size_does_not_change_the_count(self, prefix, z):
        counts = {count_by_enumeration(prefix + (y,), z) for y in (1, 2, 3)}
        assert len(counts) == 1


class TestIndexSet:
    def test_validates_order_and_positivity(self):
        assert IndexSet((1, 4, 9)) == (1, 4, 9)
        with pytest.raises(ValueError):
            IndexSet((2, 1))
        with pytest.raises(ValueError):
            IndexSet((1, 1))
        with pytest.raises(ValueError):
            IndexSet((0, 1))

    def test_of_sorts_and_dedups(self):
        assert IndexSet.of(3, 1, 3, 2) == (1, 2, 3)

    def test_first(self):
        assert IndexSet.first(0) == ()
        assert IndexSet.first(3) == (1, 2, 3)


class TestPartitions:
    def test_singleton_order(self):
        assert list(partitions_into_two(IndexSet((1,)))) == [((), (1,)), ((1,), ())]

    def test_pair_count_and_membership(self):
        pairs = list(partitions_into_two(IndexSet((1, 2))))
        assert len(pairs) == 4
        assert (IndexSet((2,)), IndexSet((1,))) in pairs

    def test_three_elements_give_eight_pairs(self):
        assert len(list(partitions_into_two(IndexSet((1, 2, 3))))) == 8

    @given(st.sets(st.integers(1, 12), max_size=6))
    def test_pairs_are_disjoint_and_cover(self, elems):
        ground = IndexSet(sorted(elems))
        pairs = list(partitions_into_two(ground))
        assert len(pairs) == 2 ** len(ground)
        assert len(set(pairs)) == len(pairs)
        for left, right in pairs:
            assert set(left) & set(right) == set()
            assert set(left) | set(right) == set(ground)

    def test_size_guard_raises_eagerly(self):
        with pytest.raises(ValueError):
            partitions_into_two(IndexSet(range(1, 40)))


class TestSubvector:
    def test_preserves_original_order(self):
        assert subvector((5, 2, 7), IndexSet((1, 3))).sizes == (5, 7)
        assert subvector((5, 2, 7), IndexSet((2,))).sizes == (2,)
        assert subvector((5, 2, 7), IndexSet(())).sizes == ()

    def test_out_of_range_index(self):
        with pytest.raises(ValueError):
            subvector((5, 2), IndexSet((3,)))


class TestRecurrence:
    @pytest.mark.parametrize("z", [1, 2, 5])
    @pytest.mark.parametrize("next_size", [1, 3])
    def test_base_case_single_term(self, next_size, z):
        report = verify_recurrence((), next_size, z)
        assert report.formula == z
        assert report.enumerated == z
        assert report.tuples_scanned == 1
        assert report.match

    def test_three_unit_cars(self):
        report = verify_recurrence((1, 1), 1, 1)
        assert report.formula == 16
        assert report.enumerated == 16
        assert report.tuples_scanned == 4

    def test_worked_example_sizes(self):
        report = verify_recurrence((2, 2), 1, 4)
        assert report.formula == 288
        assert report.enumerated == 288

    def test_sweep_small(self):
        for n in range(3):
            for sizes in itertools.product((1, 2, 3), repeat=n):
                for nxt in (1, 2, 3):
                    for z in (1, 2, 3, 4):
                        assert verify_recurrence(sizes, nxt, z).match, (sizes, nxt, z)

    def test_rejects_bad_next_size(self):
        with pytest.raises(ValueError):
            verify_recurrence((1,), 0, 1)


def test_count_report_flag_must_be_consistent():
    CountReport(3, 3, True, 9)
    with pytest.raises(ValueError):
        CountReport(3, 4, True, 9)
    assert not CountReport.compare(3, 4, 9).match
