from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from iasi.errors import BoundExceededError, EmptySetError, ParseError
from iasi.setcore import (
    IntSet,
    compatibility_index,
    compatibility_table,
    has_saturated_class,
    max_class_size,
    neglecting_number,
    parse_int_set,
    sumset,
)

from bruteforce import naive_classes, naive_sumset

int_sets = st.builds(
    IntSet, st.sets(st.integers(min_value=0, max_value=60), min_size=1, max_size=8)
)


class TestIntSet:
    def test_elements_sorted_and_distinct(self):
        s = IntSet([5, 1, 3, 1])
        assert s.elements == (1, 3, 5)
        assert len(s) == 3
        assert 3 in s and 2 not in s

    def test_min_max(self):
        s = IntSet([4, 9, 0])
        assert s.min() == 0
        assert s.max() == 9

    def test_empty_min_max_raise(self):
        with pytest.raises(EmptySetError):
            IntSet([]).min()

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            IntSet([-1])

    def test_bound_enforced_at_construction(self):
        with pytest.raises(BoundExceededError):
            IntSet([11], universe_bound=10)

    def test_equality_ignores_universe_bound(self):
        assert IntSet([1, 2], universe_bound=10) == IntSet([1, 2], universe_bound=100)
        assert hash(IntSet([1, 2], universe_bound=10)) == hash(IntSet([1, 2]))

    def test_immutable(self):
        s = IntSet([1])
        with pytest.raises(AttributeError):
            s.universe_bound = 5

    def test_literal_round_trip(self):
        s = IntSet([0, 2, 7])
        assert s.to_literal() == "{0,2,7}"
        assert parse_int_set(s.to_literal()) == s


class TestParseIntSet:
    def test_spaces_tolerated(self):
        assert parse_int_set(" { 1 , 2 , 3 } ") == IntSet([1, 2, 3])

    def test_empty_rejected(self):
        with pytest.raises(ParseError):
            parse_int_set("{}")

    def test_not_ascending_rejected(self):
        with pytest.raises(ParseError):
            parse_int_set("{2,1}")
        with pytest.raises(ParseError):
            parse_int_set("{1,1}")

    def test_garbage_rejected(self):
        for bad in ["1,2", "{1,2", "{a}", "{1;2}", "{-1}"]:
            with pytest.raises(ParseError):
                parse_int_set(bad)


class TestSumset:
    def test_singletons(self):
        assert sumset(IntSet([1]), IntSet([2])) == IntSet([3])

    def test_two_by_two(self):
        assert sumset(IntSet([1, 2]), IntSet([1, 2])) == IntSet([2, 3, 4])

    def test_with_zero(self):
        assert sumset(IntSet([0, 1]), IntSet([0, 2])) == IntSet([0, 1, 2, 3])

    def test_operator(self):
        assert IntSet([1]) + IntSet([2, 3]) == IntSet([3, 4])

    def test_empty_rejected(self):
        with pytest.raises(EmptySetError):
            sumset(IntSet([]), IntSet([1]))

    def test_overflow_rejected_not_truncated(self):
        a = IntSet([3], universe_bound=5)
        b = IntSet([4], universe_bound=5)
        with pytest.raises(BoundExceededError):
            sumset(a, b)

    def test_result_bound_is_min_of_inputs(self):
        a = IntSet([1], universe_bound=50)
        b = IntSet([2], universe_bound=10)
        assert sumset(a, b).universe_bound == 10

    @given(int_sets, int_sets)
    def test_matches_naive(self, a, b):
        assert set(sumset(a, b)) == naive_sumset(set(a), set(b))


class TestCompatibilityTable:
    def test_two_by_two_classes(self):
        t = compatibility_table(IntSet([1, 2]), IntSet([1, 2]))
        assert t.classes == {2: [(1, 1)], 3: [(1, 2), (2, 1)], 4: [(2, 2)]}

    def test_single_pair(self):
        t = compatibility_table(IntSet([5]), IntSet([7]))
        assert t.classes == {12: [(5, 7)]}

    def test_class_sizes(self):
        t = compatibility_table(IntSet([0, 1]), IntSet([0, 1]))
        assert list(t.classes) == [0, 1, 2]
        assert t.class_sizes() == [1, 2, 1]

    def test_keys_ascending_pairs_ascending(self):
        t = compatibility_table(IntSet([0, 3, 5]), IntSet([2, 4]))
        assert list(t.classes) == sorted(t.classes)
        for k, pairs in t.classes.items():
            assert pairs == sorted(pairs)
            assert all(x + y == k for x, y in pairs)

    @given(int_sets, int_sets)
    def test_matches_naive_grouping(self, a, b):
        t = compatibility_table(a, b)
        assert t.classes == naive_classes(set(a), set(b))


class TestIndexAndNeglecting:
    def test_index_examples(self):
        assert compatibility_index(IntSet([1, 2]), IntSet([1, 2])) == 3
        assert compatibility_index(IntSet([9]), IntSet([4])) == 1
        assert compatibility_index(IntSet([0, 1]), IntSet([0, 2])) == 4

    def test_neglecting_examples(self):
        assert neglecting_number(IntSet([1, 2]), IntSet([1, 2])) == 1
        assert neglecting_number(IntSet([5]), IntSet([7])) == 0
        assert neglecting_number(IntSet([0, 1, 2]), IntSet([0, 1, 2])) == 4

    def test_max_class_examples(self):
        assert max_class_size(IntSet([1, 2]), IntSet([1, 2])) == 2
        assert has_saturated_class(IntSet([1, 2]), IntSet([1, 2]))
        assert max_class_size(IntSet([0, 10]), IntSet([0, 1])) == 1
        assert not has_saturated_class(IntSet([0, 10]), IntSet([0, 1]))
        assert max_class_size(IntSet([3]), IntSet([8])) == 1
        assert has_saturated_class(IntSet([3]), IntSet([8]))


class TestProperties:
    @given(int_sets, int_sets)
    def test_cardinality_bounds(self, a, b):
        s = sumset(a, b)
        assert max(len(a), len(b)) <= len(s) <= len(a) * len(b)

    @given(int_sets, int_sets)
    def test_index_equals_sumset_size(self, a, b):
        assert compatibility_index(a, b) == len(sumset(a, b))

    @given(int_sets, int_sets)
    def test_product_splits_into_index_plus_neglecting(self, a, b):
        assert len(a) * len(b) == compatibility_index(a, b) + neglecting_number(a, b)

    @given(int_sets, int_sets)
    def test_neglecting_is_sum_of_class_excesses(self, a, b):
        t = compatibility_table(a, b)
        assert neglecting_number(a, b) == sum(size - 1 for size in t.class_sizes())

    @given(int_sets, int_sets)
    def test_classes_partition_product(self, a, b):
        t = compatibility_table(a, b)
        all_pairs = [p for pairs in t.classes.values() for p in pairs]
        assert len(all_pairs) == len(set(all_pairs)) == len(a) * len(b)
        assert set(all_pairs) == {(x, y) for x in a for y in b}

    @given(int_sets, int_sets)
    def test_max_class_at_most_min_cardinality(self, a, b):
        assert max_class_size(a, b) <= min(len(a), len(b))

    @given(int_sets, int_sets)
    def test_sumset_commutative(self, a, b):
        assert sumset(a, b) == sumset(b, a)

    @settings(max_examples=30)
    @given(int_sets)
    def test_number_of_classes_equals_sumset_size(self, a):
        t = compatibility_table(a, a)
        assert len(t.classes) == len(sumset(a, a))

    def test_sumset_at_max_forces_a_singleton_side(self):
        # exhaustive over all non-empty subset pairs of {0..5}
        universe = range(6)
        subsets = [IntSet(c) for r in range(1, 7) for c in combinations(universe, r)]
        for a in subsets:
            for b in subsets:
                if len(sumset(a, b)) == max(len(a), len(b)):
                    assert min(len(a), len(b)) == 1, (a, b)
