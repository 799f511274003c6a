import itertools
import random

import pytest

from matchfield.matching import Column, generators
from matchfield.monomials import Monomial, Partition
from matchfield.tableaux import (Tableau, canonical_rep, compare_generators,
                                 compare_tableaux, representations, simplify,
                                 simplify_pairwise)
from conftest import mono


def tab(*cols):
    return Tableau(tuple(Column(*c) for c in cols))


class TestRepresentations:
    def test_negative_witness_instance(self):
        # x2 x4 y1 y3 z4 z5 over blocks 1 | 234 | 5
        a = Partition((1, 3, 1))
        reps = representations(mono("x2*x4*y1*y3*z4*z5", 5), a, 2)
        assert reps == (tab((2, 3, 4), (4, 1, 5)),)
        # no representation has block-J row (1, 2), nor y-value row (1, 3)
        for t in reps:
            assert t.type_rows(a)[1] != (1, 2)
            assert t.j_row() != (1, 3)

    def test_unique_representation(self):
        reps = representations(mono("x1^2*y2^2*z3^2", 4), Partition((2, 2)), 2)
        assert reps == (tab((1, 2, 3), (1, 2, 3)),)

    def test_two_representations_diagonal(self):
        reps = representations(mono("x1*x2*y3*y4*z5^2", 5), Partition((5,)), 2)
        assert set(reps) == {tab((1, 3, 5), (2, 4, 5)), tab((1, 4, 5), (2, 3, 5))}

    def test_unbalanced_is_rejected(self):
        with pytest.raises(ValueError):
            representations(mono("x1^2*x2*y3*z4^2", 4), Partition((4,)), 2)

    def test_non_generator_gives_empty(self):
        # index 1 used three times never factors into valid columns
        assert representations(mono("x1^2*y1^2*z1^2", 3), Partition((3,)), 2) == ()

    def test_columns_listed_in_canonical_order(self):
        for t in representations(mono("x1*x2*y3*y4*z5^2", 5), Partition((5,)), 2):
            keys = [(c.k, c.i, c.j) for c in t.columns]
            assert keys == sorted(keys)


class TestCompareTableaux:
    def test_z_entries_decide_first(self):
        a = Partition((4,))
        assert compare_tableaux(tab((1, 2, 4)), tab((1, 2, 3)), a) == -1

    def test_type_class_comparisons(self):
        # blocks 12 | 34 | 56: tableaux of type (3,3;1,1;3,3) precede both
        # (2,3;1,2;3,3) and (2,3;1,2;2,3)
        a = Partition((2, 2, 2))
        t1 = [tab((5, 1, 6), (5, 1, 6)), tab((5, 1, 6), (5, 2, 6)),
              tab((5, 2, 6), (5, 2, 6)), tab((5, 2, 6), (5, 1, 6))]
        t2 = [tab((i1, j1, k1), (5, j2, 6))
              for i1 in (3, 4) for j1 in (1, 2) for k1 in (5, 6)
              for j2 in (3, 4) if k1 > i1]
        t3 = [tab((i1, j1, k1), (5, j2, 6))
              for i1 in (3, 4) for j1 in (1, 2) for k1 in (3, 4)
              for j2 in (3, 4) if k1 > i1]
        for earlier in t1:
            for later in t2 + t3:
                assert compare_tableaux(earlier, later, a) == -1

    def test_same_type_decided_by_x_entries(self):
        a = Partition((2, 2, 2))
        assert compare_tableaux(
            tab((3, 2, 6), (5, 3, 6)), tab((4, 1, 6), (5, 3, 6)), a) == -1

    def test_equal_tableaux(self):
        a = Partition((2, 3))
        t = tab((3, 1, 4), (3, 2, 5))
        assert compare_tableaux(t, t, a) == 0

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            compare_tableaux(tab((1, 2, 3)), tab((1, 2, 3), (1, 2, 4)), Partition((4,)))

    def test_total_order_exhaustively(self):
        # antisymmetry and transitivity over all two-column tableaux built
        # from the field's columns
        for parts in [(2, 3), (1, 3, 1)]:
            a = Partition(parts)
            cols = generators(a)
            tableaux = [Tableau((c1, c2))
                        for c1 in cols for c2 in cols]
            rng = random.Random(3)
            sample = rng.sample(tableaux, 40)
            for A, B in itertools.combinations(sample, 2):
                ab = compare_tableaux(A, B, a)
                ba = compare_tableaux(B, A, a)
                assert ab == -ba
                assert (ab == 0) == (A == B)
            for A, B, C in itertools.combinations(sample[:20], 3):
                values = {}
                for P, Q, name in ((A, B, "ab"), (B, C, "bc"), (A, C, "ac")):
                    values[name] = compare_tableaux(P, Q, a)
                if values["ab"] <= 0 and values["bc"] <= 0:
                    assert values["ac"] <= 0


class TestCanonicalRep:
    def test_worked_example(self):
        t = canonical_rep(mono("x2*x4*y3^2*z5^2", 5), Partition((3, 2)), 2)
        assert t == tab((2, 3, 5), (4, 3, 5))

    def test_unique_representation_is_canonical(self):
        t = canonical_rep(mono("x1^2*y2^2*z3^2", 4), Partition((2, 2)), 2)
        assert t == tab((1, 2, 3), (1, 2, 3))

    def test_two_candidate_case(self):
        # both multisets tie down to the y-row; larger y first wins
        t = canonical_rep(mono("x1*x2*y3*y4*z5^2", 5), Partition((5,)), 2)
        assert t == tab((1, 4, 5), (2, 3, 5))

    def test_sorted_rows_invariant(self):
        for parts, ell in [((2, 3), 2), ((1, 3, 1), 2), ((5,), 2), ((2, 2), 3)]:
            a = Partition(parts)
            cols = [c.monomial(a.n) for c in generators(a)]
            seen = set()
            for combo in itertools.combinations_with_replacement(cols, ell):
                m = combo[0]
                for q in combo[1:]:
                    m = m * q
                if m in seen:
                    continue
                seen.add(m)
                t = canonical_rep(m, a, ell)
                ks = t.k_row()
                Is = t.type_rows(a)[0]
                assert list(ks) == sorted(ks)
                assert list(Is) == sorted(Is)

    def test_not_a_generator(self):
        with pytest.raises(ValueError):
            canonical_rep(mono("x1^2*y1^2*z1^2", 3), Partition((3,)), 2)


class TestCompareGenerators:
    def test_larger_z_comes_first(self):
        a = Partition((4,))
        assert compare_generators(
            mono("x1*y2*z4", 4), mono("x1*y2*z3", 4), a, 1) == -1

    def test_y_entries_larger_first(self):
        a = Partition((4,))
        assert compare_generators(
            mono("x1*y2*z4", 4), mono("x1*y3*z4", 4), a, 1) == 1

    def test_equal_iff_same_monomial(self):
        a = Partition((2, 2))
        m = mono("x1*y2*z4", 4)
        assert compare_generators(m, m, a, 1) == 0


def random_tableau(rng, a, ell):
    cols = generators(a)
    return Tableau(tuple(rng.choice(cols) for _ in range(ell)))


class TestSimplify:
    def test_output_rows_are_sorted(self):
        a = Partition((2, 2, 2))
        t = tab((3, 2, 6), (4, 1, 6))
        out = simplify(t, a)
        assert out.monomial(6) == t.monomial(6)
        Is = out.type_rows(a)[0]
        assert list(Is) == sorted(Is)
        assert list(out.k_row()) == sorted(out.k_row())

    def test_single_column_identity(self):
        a = Partition((2, 3))
        t = tab((3, 1, 4))
        assert simplify(t, a) == t
        assert simplify_pairwise(t, a) == t

    def test_sorted_input_unchanged(self):
        a = Partition((2, 3))
        t = tab((1, 2, 4), (3, 2, 5))
        assert simplify(t, a) == t

    @pytest.mark.parametrize("parts,ell", [((5,), 2), ((2, 3), 2),
                                           ((1, 3, 1), 2), ((2, 2, 2), 3),
                                           ((6,), 3)])
    def test_random_inputs_both_procedures(self, parts, ell):
        a = Partition(parts)
        rng = random.Random(hash((parts, ell)) & 0xFFFF)
        for _ in range(120):
            t = random_tableau(rng, a, ell)
            for f in (simplify, simplify_pairwise):
                out = f(t, a)
                assert out.monomial(a.n) == t.monomial(a.n)
                assert out.is_valid(a)
                Is = out.type_rows(a)[0]
                assert list(Is) == sorted(Is)
                assert list(out.k_row()) == sorted(out.k_row())

    def test_pairwise_agrees_with_enumeration(self):
        # the output must be one of the monomial's representations
        a = Partition((1, 3, 1))
        rng = random.Random(9)
        for _ in range(60):
            t = random_tableau(rng, a, 2)
            out = simplify_pairwise(t, a)
            m = t.monomial(a.n)
            multisets = {frozenset((c, out.columns.count(c)) for c in out.columns)}
            expected = {
                frozenset((c, r.columns.count(c)) for c in r.columns)
                for r in representations(m, a, 2)
            }
            assert multisets <= expected
