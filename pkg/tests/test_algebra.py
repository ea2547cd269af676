import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from fourvectors.algebra import (FourVector, GradedElement, Operator, bracket,
                                 bracket00, bracket01, bracket11, det8,
                                 format_fourvector, graded_basis, ad_matrix,
                                 ad_columns, basis_coords, from_coords,
                                 hodge_dual, invert8, is_nilpotent,
                                 jordan_decompose, killing_form,
                                 killing_from_columns, parse_fourvector,
                                 random_unimodular, wedge4_transform)
from fourvectors.roots import cartan_subspace

H1 = Operator.diagonal([Q(1, 2)] * 4 + [Q(-1, 2)] * 4)
E1234 = FourVector.monomial(1, 2, 3, 4)
E5678 = FourVector.monomial(5, 6, 7, 8)


def rand_fourvector(rng, terms=5):
    return FourVector.from_terms(
        [(rng.randint(-9, 9), tuple(rng.sample(range(1, 9), 4)))
         for _ in range(terms)])


def rand_operator(rng, terms=6):
    rows = [[0] * 8 for _ in range(8)]
    for _ in range(terms):
        i, j = rng.sample(range(8), 2)
        rows[i][j] = rng.randint(-9, 9)
    d = [rng.randint(-4, 4) for _ in range(7)]
    d.append(-sum(d))
    for i in range(8):
        rows[i][i] = d[i]
    return Operator(rows)


def rand_graded(rng):
    return GradedElement(rand_operator(rng), rand_fourvector(rng))


class TestBracket00:
    def test_sl2_relation(self):
        e12, e21 = Operator.elementary(1, 2), Operator.elementary(2, 1)
        expected = Operator.diagonal([1, -1, 0, 0, 0, 0, 0, 0])
        assert bracket00(e12, e21) == expected

    def test_diagonals_commute(self):
        d1 = Operator.diagonal([1, 2, 3, 4, -1, -2, -3, -4])
        d2 = Operator.diagonal([2, 0, 0, 0, 0, 0, 0, -2])
        assert bracket00(d1, d2).is_zero()

    def test_diagonal_acts_by_root_value(self):
        d = Operator.diagonal([3, 1, 0, 0, 0, 0, 0, -4])
        assert bracket00(d, Operator.elementary(1, 2)) == \
            Operator.elementary(1, 2).scale(2)


class TestBracket01:
    def test_top_eigenvector(self):
        assert bracket01(H1, E1234) == E1234.scale(2)

    def test_zero_operator(self):
        assert bracket01(Operator.zero(), rand_fourvector(random.Random(0))).is_zero()

    def test_bottom_eigenvector(self):
        assert bracket01(H1, E5678) == E5678.scale(-2)


class TestBracket11:
    def test_dual_pair_gives_characteristic(self):
        assert bracket11(E1234, E5678) == H1

    def test_transversal_cartan_pair_commutes(self):
        p1 = FourVector.from_terms([(1, (1, 2, 3, 4)), (1, (5, 6, 7, 8))])
        p2 = FourVector.from_terms([(1, (1, 3, 5, 7)), (1, (2, 4, 6, 8))])
        assert bracket11(p1, p2).is_zero()

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_alternating(self, seed):
        rng = random.Random(seed)
        t = rand_fourvector(rng)
        assert bracket11(t, t).is_zero()

    @settings(max_examples=30, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_antisymmetric(self, seed):
        rng = random.Random(seed)
        t1, t2 = rand_fourvector(rng), rand_fourvector(rng)
        assert bracket11(t1, t2) == bracket11(t2, t1).scale(-1)


class TestGradedBracket:
    def test_self_bracket_vanishes(self):
        x = rand_graded(random.Random(5))
        assert bracket(x, x).is_zero()

    def test_even_part_reduces_to_commutator(self):
        rng = random.Random(6)
        a, b = rand_operator(rng), rand_operator(rng)
        out = bracket(GradedElement.even(a), GradedElement.even(b))
        assert out.part0 == bracket00(a, b) and out.part1.is_zero()

    def test_grading_is_structural(self):
        rng = random.Random(7)
        odd = GradedElement.odd(rand_fourvector(rng))
        even = GradedElement.even(rand_operator(rng))
        assert bracket(odd, odd).part1.is_zero()
        assert bracket(even, odd).part0.is_zero()

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_jacobi(self, seed):
        rng = random.Random(seed)
        x, y, z = (rand_graded(rng) for _ in range(3))
        total = (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x))
                 + bracket(z, bracket(x, y)))
        assert total.is_zero()


class TestHodge:
    def test_examples(self):
        assert hodge_dual(E1234) == E5678
        assert hodge_dual(FourVector.monomial(1, 2, 5, 6)) == \
            FourVector.monomial(3, 4, 7, 8)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 10 ** 6))
    def test_involution(self, seed):
        t = rand_fourvector(random.Random(seed))
        assert hodge_dual(hodge_dual(t)) == t


class TestAdAndKilling:
    def test_ad_of_zero(self):
        assert ad_matrix(GradedElement.zero()).is_zero()

    def test_ad_squared_kills_root_vector(self):
        x = GradedElement.odd(E1234)
        assert bracket(x, bracket(x, x)).is_zero()

    def test_ad_diagonal_on_wedges(self):
        cols = ad_columns(GradedElement.even(H1))
        for j in range(63, 133):
            assert all(r == j for r in cols[j])

    def test_killing_symmetric_and_zero(self):
        rng = random.Random(11)
        x, y = rand_graded(rng), rand_graded(rng)
        assert killing_form(x, y) == killing_form(y, x)
        assert killing_form(GradedElement.zero(), x) == 0

    def test_basis_roundtrip(self):
        rng = random.Random(12)
        for _ in range(5):
            x = rand_graded(rng)
            assert from_coords(basis_coords(x)) == x
        assert len(graded_basis()) == 133


class TestNilpotencyAndJordan:
    def test_root_vector_nilpotent(self):
        assert is_nilpotent(GradedElement.odd(E1234))

    def test_zero_nilpotent(self):
        assert is_nilpotent(GradedElement.zero())

    def test_cartan_generator_not_nilpotent(self):
        p1 = cartan_subspace()[0]
        assert not is_nilpotent(GradedElement.odd(p1))

    def test_jordan_semisimple(self):
        p1 = cartan_subspace()[0]
        s, n = jordan_decompose(GradedElement.odd(p1))
        assert s == GradedElement.odd(p1) and n.is_zero()

    def test_jordan_nilpotent(self):
        s, n = jordan_decompose(GradedElement.odd(E1234))
        assert s.is_zero() and n == GradedElement.odd(E1234)

    def test_jordan_mixed(self):
        ps = cartan_subspace()
        p = (ps[0] + ps[2] - ps[6]).scale(2)
        x = GradedElement.odd(p + FourVector.monomial(1, 3, 5, 7))
        s, n = jordan_decompose(x)
        assert s == GradedElement.odd(p)
        assert n == GradedElement.odd(FourVector.monomial(1, 3, 5, 7))
        assert bracket(s, n).is_zero()
        assert is_nilpotent(n)
        assert s + n == x

    def test_jordan_preserves_parity(self):
        rng = random.Random(13)
        x = GradedElement.odd(rand_fourvector(rng, terms=3))
        s, n = jordan_decompose(x)
        assert s.part0.is_zero() and n.part0.is_zero()
        assert s + n == x
        assert bracket(s, n).is_zero()


class TestConjugation:
    def test_unimodular_has_det_one(self):
        rng = random.Random(20)
        for _ in range(5):
            u = random_unimodular(rng)
            assert det8(u) == 1

    def test_wedge_transform_identity(self):
        ident = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
        t = rand_fourvector(random.Random(21))
        assert wedge4_transform(ident, t) == t

    def test_bracket_equivariance(self):
        from fourvectors.exact import Matrix
        rng = random.Random(22)
        u = random_unimodular(rng)
        uinv = invert8(u)
        t1, t2 = rand_fourvector(rng, 3), rand_fourvector(rng, 3)
        lhs = bracket11(wedge4_transform(u, t1), wedge4_transform(u, t2))
        rhs_mat = (Matrix.from_rows(u) @ bracket11(t1, t2).to_matrix()
                   @ Matrix.from_rows(uinv))
        assert lhs == Operator(rhs_mat.row_lists())


class TestTextFormat:
    def test_roundtrip(self):
        t = FourVector.from_terms([(Q(3, 2), (1, 2, 5, 6)), (-2, (3, 4, 7, 8))])
        assert parse_fourvector(format_fourvector(t)) == t

    def test_comments_and_blanks(self):
        text = "# leading comment\n\n1 1 2 3 4  # trailing\n"
        assert parse_fourvector(text) == E1234

    def test_unsorted_indices_carry_sign(self):
        assert parse_fourvector("1 2 1 3 4") == E1234.scale(-1)

    def test_bad_lines(self):
        with pytest.raises(ValueError):
            parse_fourvector("1 1 2 3")
        with pytest.raises(ValueError):
            parse_fourvector("1 1 2 3 9")
        with pytest.raises(ValueError):
            parse_fourvector("1 1 1 3 4")


def test_operator_trace_enforced():
    with pytest.raises(ValueError):
        Operator([[1 if i == j else 0 for j in range(8)] for i in range(8)])
