import itertools
from math import comb

import pytest

from matchfield.matching import (Column, ColumnType, column_for_subset,
                                 generators, is_valid_column, type_of)
from matchfield.monomials import Partition


def gens_as_text(parts):
    a = Partition(parts)
    return {c.monomial(a.n).text() for c in generators(a)}


class TestColumnForSubset:
    def test_singleton_block_intersection_swaps(self):
        # blocks 12 | 345, subset {1,3,4} meets the first block once
        assert column_for_subset({1, 3, 4}, Partition((2, 3))) == Column(3, 1, 4)

    def test_diagonal_field_keeps_sorted_order(self):
        assert column_for_subset({1, 2, 3}, Partition((6,))) == Column(1, 2, 3)

    def test_example_from_one_three(self):
        assert column_for_subset({2, 3, 4}, Partition((1, 3))) == Column(2, 3, 4)

    def test_rejects_non_3_subsets(self):
        with pytest.raises(ValueError):
            column_for_subset({1, 2}, Partition((4,)))


class TestValidity:
    def test_invalid_columns_from_negative_example(self):
        a = Partition((1, 3, 1))
        assert not is_valid_column(Column(4, 3, 5), a)
        assert not is_valid_column(Column(4, 1, 4), a)

    def test_valid_column(self):
        assert is_valid_column(Column(3, 1, 4), Partition((2, 3)))

    def test_repeated_index_invalid(self):
        for parts in [(4,), (2, 2), (1, 1, 2)]:
            assert not is_valid_column(Column(1, 1, 4), Partition(parts))

    def test_validity_is_membership(self):
        a = Partition((2, 2))
        valid = {c for c in generators(a)}
        for i, j, k in itertools.permutations(range(1, 5), 3):
            c = Column(i, j, k)
            assert is_valid_column(c, a) == (c in valid)


class TestGenerators:
    def test_example_two_five(self):
        assert gens_as_text((2, 3)) == {
            "x1*y2*z3", "x1*y2*z4", "x1*y2*z5", "x3*y1*z4", "x3*y1*z5",
            "x4*y1*z5", "x3*y2*z4", "x3*y2*z5", "x4*y2*z5", "x3*y4*z5",
        }

    def test_three_fields_for_n_four(self):
        assert gens_as_text((4,)) == {
            "x1*y2*z3", "x1*y2*z4", "x1*y3*z4", "x2*y3*z4"}
        assert gens_as_text((2, 2)) == {
            "x1*y2*z3", "x1*y2*z4", "x3*y1*z4", "x3*y2*z4"}
        assert gens_as_text((1, 3)) == {
            "x2*y1*z3", "x2*y1*z4", "x3*y1*z4", "x2*y3*z4"}

    def test_count_is_n_choose_3(self):
        for n in range(3, 9):
            for cuts in itertools.product((0, 1), repeat=n - 1):
                parts, run = [], 1
                for cut in cuts:
                    if cut:
                        parts.append(run); run = 1
                    else:
                        run += 1
                parts.append(run)
                assert len(generators(Partition(tuple(parts)))) == comb(n, 3)

    def test_needs_three_indices(self):
        with pytest.raises(ValueError):
            generators(Partition((2,)))

    def test_restriction_to_a_block_is_diagonal(self):
        # columns inside one block are sorted ascending
        a = Partition((2, 4, 2))
        for c in generators(a):
            blocks = {a.block_of(e) for e in (c.i, c.j, c.k)}
            if len(blocks) == 1:
                assert c.i < c.j < c.k

    def test_diagonal_field_is_fully_sorted(self):
        for c in generators(Partition((7,))):
            assert c.i < c.j < c.k

    def test_max_entry_is_z(self):
        for parts in [(5,), (2, 3), (1, 3, 1)]:
            for c in generators(Partition(parts)):
                assert c.k == max(c.i, c.j, c.k)


class TestTypes:
    def test_type_examples(self):
        assert type_of(Column(3, 1, 4), Partition((1, 3, 1))) == ColumnType(2, 1, 2)
        assert type_of(Column(1, 2, 3), Partition((5,))) == ColumnType(1, 1, 1)
        assert type_of(Column(4, 1, 5), Partition((1, 3, 1))) == ColumnType(2, 1, 3)

    def test_type_rejects_invalid(self):
        with pytest.raises(ValueError):
            type_of(Column(4, 3, 5), Partition((1, 3, 1)))

    def test_type_inequalities(self):
        for parts in [(6,), (2, 4), (1, 2, 3), (2, 2, 2)]:
            a = Partition(parts)
            for c in generators(a):
                t = type_of(c, a)
                assert t.J <= t.I <= t.K
