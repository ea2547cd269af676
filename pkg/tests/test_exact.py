import itertools
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from fourvectors import exact
from fourvectors.exact import (Matrix, jordan_chevalley, kernel_basis,
                               minimal_polynomial, poly_deriv, poly_gcd,
                               rank, solve_linear, span_intersection)


def rank_by_minors(rows):
    """Independent rank oracle: largest nonzero minor, by enumeration."""
    m, n = len(rows), len(rows[0]) if rows else 0

    def det(idx_r, idx_c):
        d = Q(0)
        for perm in itertools.permutations(range(len(idx_c))):
            sgn, prod = 1, Q(1)
            for i in range(len(perm)):
                for j in range(i + 1, len(perm)):
                    if perm[i] > perm[j]:
                        sgn = -sgn
            for i, p in enumerate(perm):
                prod *= Q(rows[idx_r[i]][idx_c[p]])
            d += sgn * prod
        return d

    for size in range(min(m, n), 0, -1):
        for idx_r in itertools.combinations(range(m), size):
            for idx_c in itertools.combinations(range(n), size):
                if det(idx_r, idx_c) != 0:
                    return size
    return 0


def test_solve_identity():
    x, ker = solve_linear(Matrix.identity(2), [1, 2])
    assert x == [Q(1), Q(2)] and ker == []


def test_solve_zero_matrix():
    x, ker = solve_linear(Matrix.zero(2, 2), [0, 0])
    assert x == [Q(0), Q(0)] and len(ker) == 2


def test_solve_rank_deficient():
    # frozen from hand Gaussian elimination: x = (1, 0), kernel span (1, -1)
    a = Matrix.from_rows([[1, 1], [2, 2]])
    x, ker = solve_linear(a, [1, 2])
    assert x == [Q(1), Q(0)]
    assert len(ker) == 1 and ker[0][0] == -ker[0][1] != 0


def test_solve_inconsistent():
    assert solve_linear(Matrix.from_rows([[1, 1], [2, 2]]), [1, 3]) is None


def test_solve_shape_mismatch():
    with pytest.raises(ValueError):
        solve_linear(Matrix.identity(2), [1, 2, 3])


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(3)) == []
    assert len(kernel_basis(Matrix.zero(3, 3))) == 3
    assert len(kernel_basis(Matrix.from_rows([[1, 2, 3]]))) == 2


def test_rank_examples():
    assert rank(Matrix.identity(5)) == 5
    assert rank(Matrix.zero(3, 3)) == 0
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_solve_and_rank_properties(data):
    m = data.draw(st.integers(1, 4))
    n = data.draw(st.integers(1, 4))
    rows = [[data.draw(st.integers(-5, 5)) for _ in range(n)] for _ in range(m)]
    a = Matrix.from_rows(rows)
    r = rank(a)
    assert r == rank_by_minors(rows)
    ker = kernel_basis(a)
    assert r + len(ker) == n
    for k in ker:
        assert a.apply(k) == [Q(0)] * m
    b = [data.draw(st.integers(-5, 5)) for _ in range(m)]
    sol = solve_linear(a, b)
    if sol is not None:
        x, ker2 = sol
        assert a.apply(x) == [Q(x) for x in b]
        assert len(ker2) == len(ker)


def test_jordan_chevalley_nilpotent_block():
    m = Matrix.from_rows([[0, 1], [0, 0]])
    s, n = jordan_chevalley(m)
    assert s.is_zero() and n == m


def test_jordan_chevalley_diagonal():
    m = Matrix.from_rows([[1, 0], [0, 2]])
    s, n = jordan_chevalley(m)
    assert s == m and n.is_zero()


def test_jordan_chevalley_classic_split():
    m = Matrix.from_rows([[1, 1], [0, 1]])
    s, n = jordan_chevalley(m)
    assert s == Matrix.identity(2)
    assert n == Matrix.from_rows([[0, 1], [0, 0]])


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_jordan_chevalley_properties(data):
    n = data.draw(st.integers(1, 4))
    rng = random.Random(data.draw(st.integers(0, 10 ** 6)))
    diag = [rng.randint(-2, 2) for _ in range(n)]
    j = [[Q(0)] * n for _ in range(n)]
    for i in range(n):
        j[i][i] = Q(diag[i])
    for i in range(n - 1):
        if diag[i] == diag[i + 1] and rng.random() < 0.6:
            j[i][i + 1] = Q(1)
    p = [[Q(1) if i == k else Q(0) for k in range(n)] for i in range(n)]
    for _ in range(5):
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            c = rng.randint(-2, 2)
            for k in range(n):
                p[a][k] += c * p[b][k]
    pm = Matrix.from_rows(p)
    pinv_cols = [solve_linear(pm, [Q(1) if i == k else Q(0) for i in range(n)])[0]
            for k in range(n)]
    pinv = Matrix.from_rows(pinv_cols).transpose()
    m = pm @ Matrix.from_rows(j) @ pinv
    s, nil = jordan_chevalley(m)
    assert s + nil == m
    assert s @ nil == nil @ s
    power = nil
    for _ in range(n):
        power = power @ nil
    assert power.is_zero()
    mp = minimal_polynomial(s)
    assert poly_gcd(mp, poly_deriv(mp)) == [Q(1)]


def test_minimal_polynomial_fractional():
    m = Matrix.from_rows([[Q(1, 2), Q(1, 3)], [0, Q(1, 2)]])
    assert minimal_polynomial(m) == [Q(1, 4), Q(-1), Q(1)]


def test_span_intersection():
    inter = span_intersection([[1, 0, 0], [0, 1, 0]], [[0, 1, 1], [1, 0, 0]])
    space = exact.RowSpace(inter)
    assert space.dim == 1 and space.contains([1, 0, 0])
    assert span_intersection([], [[1, 0]]) == []


def test_rational_text_roundtrip():
    assert exact.parse_rational("3/4") == Q(3, 4)
    assert exact.parse_rational("-2") == Q(-2)
    assert exact.format_rational(Q(3, 4)) == "3/4"
    assert exact.format_rational(Q(5)) == "5"


def test_matrix_debug_format():
    m = Matrix.from_rows([[1, Q(1, 2)], [0, 1]])
    assert m.to_text() == "1 1/2\n0 1"
