"""Exact rational scalars and dense linear algebra over Q.

Scalars are `fractions.Fraction`.  All eliminations run on integer rows
(denominators cleared once, rows kept gcd-reduced), which is much faster
than Fraction arithmetic inside the inner loops and stays bit-exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction as Q
from math import gcd
from typing import Callable, Optional, Sequence


def parse_rational(text: str) -> Q:
    """Parse "p/q" or "p" into a Fraction."""
    return Q(text.strip())


def format_rational(x: Q) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(x)


@dataclass(frozen=True)
class Matrix:
    """Dense exact matrix; `entries` is row-major, length rows*cols."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged rows")
        return cls(nr, nc, tuple(Q(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(Q(1) if i == j else Q(0)
                               for i in range(n) for j in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (Q(0),) * (rows * cols))

    def __getitem__(self, ij) -> Q:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def row_lists(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_shape(other)
        return Matrix(self.rows, self.cols,
                      tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "Matrix":
        c = Q(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in product")
        a, b = self.row_lists(), other.row_lists()
        out = []
        for i in range(self.rows):
            ai = a[i]
            for j in range(other.cols):
                out.append(sum((ai[k] * b[k][j] for k in range(self.cols)), Q(0)))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> list:
        if len(v) != self.cols:
            raise ValueError("shape mismatch in matvec")
        return [sum((self[i, k] * v[k] for k in range(self.cols)), Q(0))
                for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def to_text(self) -> str:
        """Debug format: one row per line, whitespace-separated rationals."""
        return "\n".join(" ".join(format_rational(self[i, j]) for j in range(self.cols))
                         for i in range(self.rows))

    def _check_shape(self, other: "Matrix"):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


# ---------------------------------------------------------------------------
# integer row-echelon engine

def _int_row(row) -> list:
    """Clear denominators of one row of Fractions; gcd-reduce."""
    lcm = 1
    for x in row:
        d = x.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(x.numerator * (lcm // x.denominator)) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _echelon(rows: list, ncols: int):
    """In-place integer forward elimination.

    Pivot rows are chosen with smallest |pivot| to limit entry growth;
    every updated row is gcd-reduced.  Returns the list of pivot columns
    (row i of the result has its pivot in pivot_cols[i]).
    """
    pivot_cols = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        best = -1
        best_abs = 0
        for i in range(r, nrows):
            v = rows[i][c]
            if v and (best < 0 or abs(v) < best_abs):
                best, best_abs = i, abs(v)
        if best < 0:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv_row = rows[r]
        p = piv_row[c]
        for i in range(r + 1, nrows):
            v = rows[i][c]
            if not v:
                continue
            ri = rows[i]
            new = [p * a - v * b for a, b in zip(ri, piv_row)]
            g = 0
            for a in new:
                g = gcd(g, a)
            if g > 1:
                new = [a // g for a in new]
            rows[i] = new
        pivot_cols.append(c)
        r += 1
    return pivot_cols


def _back_substitute(rows, pivot_cols, ncols, rhs_col=None):
    """Solve the echelon system for pivot variables, free variables = 0.

    `rows` are integer echelon rows of width ncols (+1 if rhs_col is the
    appended right-hand side).  Returns Fractions of length ncols.
    """
    x = [Q(0)] * ncols
    for r in range(len(pivot_cols) - 1, -1, -1):
        c = pivot_cols[r]
        row = rows[r]
        s = Q(row[rhs_col]) if rhs_col is not None else Q(0)
        for c2 in range(c + 1, ncols):
            if row[c2]:
                s -= row[c2] * x[c2]
        x[c] = s / row[c]
    return x


def rank(a: Matrix) -> int:
    """Exact rank over Q."""
    rows = [_int_row(a.row(i)) for i in range(a.rows)]
    return len(_echelon(rows, a.cols))


def kernel_basis(a: Matrix) -> list:
    """Exact basis of the null space, one list of Fractions per vector."""
    rows = [_int_row(a.row(i)) for i in range(a.rows)]
    pivot_cols = _echelon(rows, a.cols)
    pivset = set(pivot_cols)
    basis = []
    for free in range(a.cols):
        if free in pivset:
            continue
        x = [Q(0)] * a.cols
        x[free] = Q(1)
        for r in range(len(pivot_cols) - 1, -1, -1):
            c = pivot_cols[r]
            row = rows[r]
            s = Q(0)
            for c2 in range(c + 1, a.cols):
                if row[c2]:
                    s -= row[c2] * x[c2]
            x[c] = s / row[c]
        basis.append(x)
    return basis


def solve_linear(a: Matrix, b: Sequence) -> Optional[tuple]:
    """Solve a x = b exactly.

    Returns (particular solution, kernel basis) or None when inconsistent.
    Free variables of the particular solution are set to zero.
    """
    if len(b) != a.rows:
        raise ValueError("right-hand side length does not match row count")
    bq = [Q(x) for x in b]
    rows = [_int_row(a.row(i) + [bq[i]]) for i in range(a.rows)]
    pivot_cols = _echelon(rows, a.cols + 1)
    if pivot_cols and pivot_cols[-1] == a.cols:
        return None
    x = _back_substitute(rows, pivot_cols, a.cols, rhs_col=a.cols)
    return x, kernel_basis(a)


class RowSpace:
    """Echelonized row span supporting fast membership and reduction."""

    def __init__(self, vectors: Sequence[Sequence]):
        self.ncols = len(vectors[0]) if vectors else 0
        rows = [_int_row([Q(x) for x in v]) for v in vectors]
        pivot_cols = _echelon(rows, self.ncols)
        self.rows = rows[:len(pivot_cols)]
        self.pivot_cols = pivot_cols

    @property
    def dim(self) -> int:
        return len(self.pivot_cols)

    def reduce(self, vector: Sequence) -> list:
        """Residual of `vector` after elimination; zero iff in the span."""
        v = _int_row([Q(x) for x in vector])
        for row, c in zip(self.rows, self.pivot_cols):
            if v[c]:
                p, w = row[c], v[c]
                v = [p * a - w * b for a, b in zip(v, row)]
                g = 0
                for a in v:
                    g = gcd(g, a)
                if g > 1:
                    v = [a // g for a in v]
        return v

    def contains(self, vector: Sequence) -> bool:
        return all(x == 0 for x in self.reduce(vector))


def span_intersection(u_rows: Sequence[Sequence], v_rows: Sequence[Sequence]) -> list:
    """Basis (list of Fraction lists) of span(u_rows) ∩ span(v_rows)."""
    if not u_rows or not v_rows:
        return []
    n = len(u_rows[0])
    m = Matrix.from_rows([[u_rows[i][c] for i in range(len(u_rows))] +
                          [-v_rows[j][c] for j in range(len(v_rows))]
                          for c in range(n)])
    out = []
    for k in kernel_basis(m):
        vec = [sum((k[i] * u_rows[i][c] for i in range(len(u_rows))), Q(0))
               for c in range(n)]
        if any(vec):
            out.append(vec)
    # prune to an independent set
    if out:
        space = RowSpace(out)
        pruned, tmp = [], []
        for v in out:
            trial = RowSpace(tmp + [v])
            if trial.dim > len(pruned):
                pruned.append(v)
                tmp.append(v)
            if len(pruned) == space.dim:
                break
        out = pruned
    return out


# ---------------------------------------------------------------------------
# polynomials over Q (coefficient lists, ascending degree)

def poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_add(p: list, q: list) -> list:
    n = max(len(p), len(q))
    out = [Q(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly_trim(out)


def poly_mul(p: list, q: list) -> list:
    if not p or not q:
        return []
    out = [Q(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p: list, q: list) -> tuple:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Q(0)] * max(0, len(p) - len(q) + 1)
    dq, lead = len(q) - 1, q[-1]
    while len(rem) >= len(q) and poly_trim(rem):
        shift = len(rem) - len(q)
        c = rem[-1] / lead
        quo[shift] = c
        for i, b in enumerate(q):
            rem[shift + i] -= c * b
        poly_trim(rem)
    return poly_trim(quo), rem


def poly_monic(p: list) -> list:
    if not p:
        return []
    lead = p[-1]
    return [c / lead for c in p]


def poly_gcd(p: list, q: list) -> list:
    a, b = list(p), list(q)
    while poly_trim(b):
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_lcm(p: list, q: list) -> list:
    if not p or not q:
        return []
    g = poly_gcd(p, q)
    return poly_monic(poly_mul(p, poly_divmod(q, g)[0]))


def poly_deriv(p: list) -> list:
    return poly_trim([i * c for i, c in enumerate(p)][1:])


def poly_eval(p: list, x: Q) -> Q:
    acc = Q(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def squarefree_part(p: list) -> list:
    """Radical p / gcd(p, p'): the product of the distinct irreducible factors."""
    g = poly_gcd(p, poly_deriv(p))
    return poly_monic(poly_divmod(p, g)[0])


def _poly_mod(p: list, m: list) -> list:
    return poly_divmod(p, m)[1]


def _poly_compose_mod(p: list, z: list, m: list) -> list:
    """p(z) mod m, by Horner."""
    acc: list = []
    for c in reversed(p):
        acc = _poly_mod(poly_add(poly_mul(acc, z), [c]), m)
    return acc


def _poly_invert_mod(p: list, m: list) -> list:
    """Inverse of p in Q[t]/(m); p must be coprime to m."""
    r0, r1 = list(m), _poly_mod(p, m)
    s0, s1 = [], [Q(1)]
    while poly_trim(list(r1)):
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_add(s0, [-c for c in poly_mul(q, s1)])
    if len(r0) != 1:
        raise ArithmeticError("element not invertible modulo m")
    return _poly_mod([c / r0[0] for c in s0], m)


# ---------------------------------------------------------------------------
# minimal polynomial via Krylov chains (integer vectors throughout)

def _local_min_poly_int(matvec: Callable, v: list) -> list:
    """Monic minimal polynomial of the vector v under the integer matvec.

    Builds the Krylov chain v, Av, A^2 v, ... with incremental integer
    elimination, tracking the coefficient combination that produced each
    reduced vector.  Returns integer coefficient list (ascending), content
    reduced; callers rescale for the matrix denominator.
    """
    n = len(v)
    ech: list = []       # (pivot index, reduced vector, combo over powers)
    cur = list(v)
    k = 0
    while True:
        combo = [0] * (k + 1)
        combo[k] = 1
        red = list(cur)
        for pos, row, rc in ech:
            if red[pos]:
                p, w = row[pos], red[pos]
                red = [p * a - w * b for a, b in zip(red, row)]
                combo = [p * a for a in combo]
                for i, b in enumerate(rc):
                    combo[i] -= w * b
                g = 0
                for a in itertools.chain(red, combo):
                    g = gcd(g, a)
                if g > 1:
                    red = [a // g for a in red]
                    combo = [a // g for a in combo]
        pos = next((i for i, a in enumerate(red) if a), -1)
        if pos < 0:
            return combo
        ech.append((pos, red, combo))
        if k >= n:
            raise AssertionError("Krylov chain exceeded dimension")
        cur = matvec(cur)
        k += 1


def _rescale_min_poly(int_poly: list, den: int) -> list:
    # substituting A' = den*A in sum c_j A'^j = 0 gives sum c_j den^j A^j = 0
    p = [Q(c) * Q(den) ** j for j, c in enumerate(int_poly)]
    return poly_monic(poly_trim(p))


def min_poly_from_matvec(matvec: Callable, n: int, den: int = 1,
                         vectors: Optional[Sequence] = None) -> list:
    """Monic minimal polynomial of A = A'/den given the integer action of A'.

    With `vectors=None` this is deterministic and exact: the lcm of the
    local minimal polynomials of all standard basis vectors.  A caller may
    pass candidate vectors to try first (the result is then only a divisor
    of the true minimal polynomial unless verified downstream).
    """
    m_int: list = [1]

    def annihilates(poly_int, vec):
        acc = [0] * n
        for c in reversed(poly_int):
            acc = matvec(acc)
            if c:
                acc = [a + c * b for a, b in zip(acc, vec)]
        return all(a == 0 for a in acc)

    basis_iter = vectors if vectors is not None else (
        [0] * i + [1] + [0] * (n - 1 - i) for i in range(n))
    for v in basis_iter:
        v = list(v)
        if len(m_int) > 1 and annihilates(m_int, v):
            continue
        local = _local_min_poly_int(matvec, v)
        m_q = poly_lcm(_rescale_min_poly(m_int, 1), _rescale_min_poly(local, 1))
        m_int = _int_row(m_q)
    return _rescale_min_poly(m_int, den)


def is_nilpotent_matvec(matvec: Callable, n: int) -> bool:
    """True iff the integer matrix behind `matvec` is nilpotent.

    Checks that the local minimal polynomial of every basis vector is a
    power of t; exits early at the first nonzero lower coefficient.
    """
    for i in range(n):
        v = [0] * n
        v[i] = 1
        local = _local_min_poly_int(matvec, v)
        if any(local[:-1]):
            return False
    return True


def minimal_polynomial(a: Matrix) -> list:
    """Monic minimal polynomial of a square matrix, exact."""
    if a.rows != a.cols:
        raise ValueError("matrix must be square")
    n = a.rows
    den = 1
    for x in a.entries:
        den = den * x.denominator // gcd(den, x.denominator)
    rows = [[int(a[i, j] * den) for j in range(n)] for i in range(n)]

    def matvec(v):
        return [sum(ri[j] * v[j] for j in range(n) if v[j]) for ri in rows]

    return min_poly_from_matvec(matvec, n, den)


def jordan_chevalley(m: Matrix) -> tuple:
    """Split m = s + n with s, n commuting polynomials in m, n nilpotent,
    s with squarefree minimal polynomial, both with zero constant term.

    Newton lifting in Q[t]/(minpoly): no root extraction is needed.
    """
    if m.rows != m.cols:
        raise ValueError("matrix must be square")
    mp = minimal_polynomial(m)
    s_poly = semisimple_part_poly(mp)
    s = _poly_of_matrix(s_poly, m)
    return s, m - s


def semisimple_part_poly(min_poly: list) -> list:
    """Polynomial q with q(A) the semisimple part of A, q(0) = 0.

    `min_poly` must be a monic multiple of the minimal polynomial of A
    (any annihilating polynomial works).
    """
    g = squarefree_part(min_poly)
    z = [Q(0), Q(1)]
    for _ in range(len(min_poly).bit_length() + 2):
        gz = _poly_compose_mod(g, z, min_poly)
        if not gz:
            break
        dgz = _poly_compose_mod(poly_deriv(g), z, min_poly)
        u = _poly_invert_mod(dgz, min_poly)
        z = _poly_mod(poly_add(z, [-c for c in poly_mul(gz, u)]), min_poly)
    else:
        raise AssertionError("Newton lifting failed to converge")
    if z and z[0] != 0:
        m0 = poly_eval(min_poly, Q(0))
        if m0 == 0:
            raise AssertionError("constant term should vanish when 0 is an eigenvalue")
        z = poly_add(z, [-(z[0] / m0) * c for c in min_poly])
    return z


def _poly_of_matrix(p: list, m: Matrix) -> Matrix:
    acc = Matrix.zero(m.rows, m.cols)
    for c in reversed(p):
        acc = acc @ m + Matrix.identity(m.rows).scale(c)
    return acc
