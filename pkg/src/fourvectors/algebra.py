"""The Z2-graded Lie algebra g = sl(8) (+) wedge^4 C^8 of type E7.

Elements of the odd part are stored as sparse maps from sorted 4-index
tuples (1-based) to rational coefficients; a stored monomial e_{ijkl}
stands for the fully antisymmetrized tensor with unit top coefficient.
The even/odd/odd-odd bracket components follow the tensor formulas with
the volume form normalized by delta(e_1,...,e_8) = 1 and the -1/288
factor on the odd-odd component.  All values are immutable in use; every
function here is pure.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction as Q
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import exact
from .exact import Matrix

Index4 = Tuple[int, int, int, int]

INDEX4_BASIS: Tuple[Index4, ...] = tuple(itertools.combinations(range(1, 9), 4))
INDEX4_POS = {s: i for i, s in enumerate(INDEX4_BASIS)}
_COMPLEMENT = {s: tuple(x for x in range(1, 9) if x not in s) for s in INDEX4_BASIS}

DIM_G = 133
DIM_SL8 = 63
_Q0, _Q1 = Q(0), Q(1)


def perm_sign(seq: Sequence[int]) -> int:
    """Parity of a sequence of distinct integers (+1/-1)."""
    inv = 0
    n = len(seq)
    for i in range(n):
        si = seq[i]
        for j in range(i + 1, n):
            if si > seq[j]:
                inv += 1
    return -1 if inv & 1 else 1


def sort_with_sign(indices: Sequence[int]) -> Tuple[int, Index4]:
    """Sort 4 indices, returning (permutation sign, sorted tuple); sign 0 on repeats."""
    if len(set(indices)) != len(indices):
        return 0, tuple(sorted(indices))  # type: ignore[return-value]
    return perm_sign(indices), tuple(sorted(indices))  # type: ignore[return-value]


# sign of the 8-tuple (S, complement-minus-m, m) against (1..8), per S and m
_BASE_SIGN: Dict[Tuple[Index4, int], int] = {}
for _s in INDEX4_BASIS:
    for _m in _COMPLEMENT[_s]:
        _r = tuple(x for x in _COMPLEMENT[_s] if x != _m)
        _BASE_SIGN[(_s, _m)] = perm_sign(_s + _r + (_m,))


class FourVector:
    """Element of wedge^4 V: sparse {sorted 4-tuple: nonzero Fraction}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Optional[Dict[Index4, Q]] = None):
        self.coeffs: Dict[Index4, Q] = {}
        if coeffs:
            for k, v in coeffs.items():
                if v:
                    self.coeffs[k] = v

    @classmethod
    def monomial(cls, *indices: int, coeff=1) -> "FourVector":
        if len(indices) != 4 or not all(1 <= i <= 8 for i in indices):
            raise ValueError("need four indices in 1..8")
        sign, key = sort_with_sign(indices)
        if sign == 0:
            raise ValueError("repeated index in wedge monomial")
        return cls({key: Q(coeff) * sign})

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple]) -> "FourVector":
        out: Dict[Index4, Q] = {}
        for coeff, indices in terms:
            sign, key = sort_with_sign(tuple(indices))
            if sign == 0:
                raise ValueError(f"repeated index in {indices}")
            out[key] = out.get(key, _Q0) + Q(coeff) * sign
        return cls(out)

    def terms(self) -> List[Tuple[Q, Index4]]:
        return [(self.coeffs[k], k) for k in sorted(self.coeffs)]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return isinstance(other, FourVector) and self.coeffs == other.coeffs

    def __add__(self, other: "FourVector") -> "FourVector":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = out.get(k, _Q0) + v
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return FourVector(out)

    def __sub__(self, other: "FourVector") -> "FourVector":
        return self + other.scale(-1)

    def __neg__(self) -> "FourVector":
        return self.scale(-1)

    def scale(self, c) -> "FourVector":
        c = Q(c)
        if not c:
            return FourVector()
        return FourVector({k: c * v for k, v in self.coeffs.items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "FourVector(0)"
        return "FourVector(" + " + ".join(
            f"{v}*e{''.join(map(str, k))}" for v, k in
            ((self.coeffs[k], k) for k in sorted(self.coeffs))) + ")"


def parse_fourvector(text: str) -> FourVector:
    """Text format: one term per line, "coeff i j k l"; '#' comments, blanks ok."""
    terms = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ValueError(f"line {lineno}: expected 'coeff i j k l'")
        coeff = exact.parse_rational(parts[0])
        idx = tuple(int(p) for p in parts[1:])
        if not all(1 <= i <= 8 for i in idx):
            raise ValueError(f"line {lineno}: indices must lie in 1..8")
        terms.append((coeff, idx))
    return FourVector.from_terms(terms)


def format_fourvector(t: FourVector) -> str:
    return "\n".join(f"{exact.format_rational(c)} {' '.join(map(str, k))}"
                     for c, k in t.terms())


class Operator:
    """Traceless 8x8 exact matrix (an element of sl(8))."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence], check: bool = True):
        self.rows: Tuple[Tuple[Q, ...], ...] = tuple(
            tuple(Q(x) for x in r) for r in rows)
        if check:
            if len(self.rows) != 8 or any(len(r) != 8 for r in self.rows):
                raise ValueError("operator must be 8x8")
            if sum((self.rows[i][i] for i in range(8)), _Q0) != 0:
                raise ValueError("operator must be traceless")

    @classmethod
    def zero(cls) -> "Operator":
        return cls([[0] * 8 for _ in range(8)], check=False)

    @classmethod
    def elementary(cls, i: int, j: int) -> "Operator":
        """E_ij (1-based), i != j."""
        if i == j:
            raise ValueError("diagonal elementary matrices are not traceless")
        rows = [[0] * 8 for _ in range(8)]
        rows[i - 1][j - 1] = 1
        return cls(rows)

    @classmethod
    def diagonal(cls, values: Sequence) -> "Operator":
        vals = [Q(v) for v in values]
        rows = [[vals[i] if i == j else _Q0 for j in range(8)] for i in range(8)]
        return cls(rows)

    def diagonal_entries(self) -> List[Q]:
        return [self.rows[i][i] for i in range(8)]

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j] == 0
                   for i in range(8) for j in range(8) if i != j)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __eq__(self, other) -> bool:
        return isinstance(other, Operator) and self.rows == other.rows

    def __add__(self, other: "Operator") -> "Operator":
        return Operator([[a + b for a, b in zip(ra, rb)]
                         for ra, rb in zip(self.rows, other.rows)], check=False)

    def __sub__(self, other: "Operator") -> "Operator":
        return Operator([[a - b for a, b in zip(ra, rb)]
                         for ra, rb in zip(self.rows, other.rows)], check=False)

    def __neg__(self) -> "Operator":
        return self.scale(-1)

    def scale(self, c) -> "Operator":
        c = Q(c)
        return Operator([[c * x for x in r] for r in self.rows], check=False)

    def to_matrix(self) -> Matrix:
        return Matrix.from_rows(self.rows)

    def to_text(self) -> str:
        return "\n".join(" ".join(exact.format_rational(x) for x in r)
                         for r in self.rows)

    def __repr__(self) -> str:
        if self.is_diagonal():
            return "Operator(diag(%s))" % ", ".join(map(str, self.diagonal_entries()))
        return "Operator(%s)" % [list(map(str, r)) for r in self.rows]


@dataclass(frozen=True)
class GradedElement:
    """x = part0 + part1 with part0 in sl(8) and part1 in wedge^4 V."""

    part0: Operator
    part1: FourVector

    @classmethod
    def zero(cls) -> "GradedElement":
        return cls(Operator.zero(), FourVector())

    @classmethod
    def even(cls, a: Operator) -> "GradedElement":
        return cls(a, FourVector())

    @classmethod
    def odd(cls, t: FourVector) -> "GradedElement":
        return cls(Operator.zero(), t)

    def is_zero(self) -> bool:
        return self.part0.is_zero() and self.part1.is_zero()

    def __add__(self, other: "GradedElement") -> "GradedElement":
        return GradedElement(self.part0 + other.part0, self.part1 + other.part1)

    def __sub__(self, other: "GradedElement") -> "GradedElement":
        return GradedElement(self.part0 - other.part0, self.part1 - other.part1)

    def scale(self, c) -> "GradedElement":
        return GradedElement(self.part0.scale(c), self.part1.scale(c))


# ---------------------------------------------------------------------------
# brackets

def _mul8(a, b):
    out = [[_Q0] * 8 for _ in range(8)]
    for i in range(8):
        ai, oi = a[i], out[i]
        for k in range(8):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(8):
                    w = bk[j]
                    if w:
                        oi[j] += v * w
    return out


def bracket00(a: Operator, b: Operator) -> Operator:
    """Commutator AB - BA."""
    ab = _mul8(a.rows, b.rows)
    ba = _mul8(b.rows, a.rows)
    return Operator([[x - y for x, y in zip(ra, rb)]
                     for ra, rb in zip(ab, ba)], check=False)


def bracket01(a: Operator, t: FourVector) -> FourVector:
    """Derivation action of sl(8) on wedge^4 V."""
    out: Dict[Index4, Q] = {}
    rows = a.rows
    for key, c in t.coeffs.items():
        for pos in range(4):
            s = key[pos]
            for r in range(1, 9):
                v = rows[r - 1][s - 1]
                if v:
                    idx = key[:pos] + (r,) + key[pos + 1:]
                    sign, skey = sort_with_sign(idx)
                    if sign:
                        acc = out.get(skey, _Q0) + c * v * sign
                        if acc:
                            out[skey] = acc
                        elif skey in out:
                            del out[skey]
    return FourVector(out)


def _odd_pair_accumulate(t1: FourVector, t2: FourVector, ent, flip: int):
    # one orientation of the odd-odd contraction; ent is an 8x8 accumulator
    get2 = t2.coeffs.get
    for s1, a1 in t1.coeffs.items():
        comp = _COMPLEMENT[s1]
        for m in comp:
            r3 = tuple(x for x in comp if x != m)
            base = _BASE_SIGN[(s1, m)] * flip * a1
            for k in s1 + (m,):
                lo = sum(1 for x in r3 if x < k)
                s2 = r3[:lo] + (k,) + r3[lo:]
                a2 = get2(s2)
                if a2 is not None:
                    # sign of moving k from the last slot into position lo
                    if (3 - lo) & 1:
                        ent[k - 1][m - 1] -= base * a2
                    else:
                        ent[k - 1][m - 1] += base * a2


def bracket11(t1: FourVector, t2: FourVector) -> Operator:
    """Odd-odd bracket into sl(8): the -1/288 volume-form contraction."""
    ent = [[_Q0] * 8 for _ in range(8)]
    _odd_pair_accumulate(t1, t2, ent, 1)
    _odd_pair_accumulate(t2, t1, ent, -1)
    half = Q(-1, 2)
    return Operator([[half * x for x in r] for r in ent])


def bracket(x: GradedElement, y: GradedElement) -> GradedElement:
    """Full graded bracket: g0xg0->g0, g0xg1->g1, g1xg1->g0."""
    part0 = bracket00(x.part0, y.part0) + bracket11(x.part1, y.part1)
    part1 = bracket01(x.part0, y.part1) - bracket01(y.part0, x.part1)
    return GradedElement(part0, part1)


def hodge_dual(t: FourVector) -> FourVector:
    """e_S -> sign(S, S^c) e_{S^c}, extended linearly."""
    out: Dict[Index4, Q] = {}
    for key, c in t.coeffs.items():
        comp = _COMPLEMENT[key]
        out[comp] = c * perm_sign(key + comp)
    return FourVector(out)


# ---------------------------------------------------------------------------
# the standard 133-element basis: E_ij (row-major, i != j), d_1..d_7, wedges

def _d_basis_operator(i: int) -> Operator:
    # d_i = (1/8) diag((8-i) repeated i times, (-i) repeated 8-i times)
    vals = [Q(8 - i, 8)] * i + [Q(-i, 8)] * (8 - i)
    return Operator.diagonal(vals)


_EIJ_PAIRS: Tuple[Tuple[int, int], ...] = tuple(
    (i, j) for i in range(1, 9) for j in range(1, 9) if i != j)
_EIJ_POS = {p: n for n, p in enumerate(_EIJ_PAIRS)}

_BASIS_CACHE: Optional[List[GradedElement]] = None


def graded_basis() -> List[GradedElement]:
    """The ordered basis: 56 elementary E_ij, then d_1..d_7, then 70 wedges."""
    global _BASIS_CACHE
    if _BASIS_CACHE is None:
        basis = [GradedElement.even(Operator.elementary(i, j)) for i, j in _EIJ_PAIRS]
        basis += [GradedElement.even(_d_basis_operator(i)) for i in range(1, 8)]
        basis += [GradedElement.odd(FourVector({s: _Q1})) for s in INDEX4_BASIS]
        _BASIS_CACHE = basis
    return _BASIS_CACHE


def basis_coords(x: GradedElement) -> List[Q]:
    """Coordinates of x in the 133-element basis."""
    coords = [_Q0] * DIM_G
    rows = x.part0.rows
    for n, (i, j) in enumerate(_EIJ_PAIRS):
        coords[n] = rows[i - 1][j - 1]
    diag = x.part0.diagonal_entries()
    for i in range(1, 8):
        coords[56 + i - 1] = diag[i - 1] - diag[i]  # d_i is dual to eps_i - eps_{i+1}
    for key, c in x.part1.coeffs.items():
        coords[DIM_SL8 + INDEX4_POS[key]] = c
    return coords


def from_coords(coords: Sequence) -> GradedElement:
    rows = [[_Q0] * 8 for _ in range(8)]
    for n, (i, j) in enumerate(_EIJ_PAIRS):
        if coords[n]:
            rows[i - 1][j - 1] = Q(coords[n])
    op = Operator(rows, check=False)
    for i in range(1, 8):
        c = Q(coords[56 + i - 1])
        if c:
            op = op + _d_basis_operator(i).scale(c)
    fv = FourVector({INDEX4_BASIS[k]: Q(coords[DIM_SL8 + k])
                     for k in range(70) if coords[DIM_SL8 + k]})
    return GradedElement(op, fv)


def ad_columns(x: GradedElement) -> List[Dict[int, Q]]:
    """Sparse columns of ad(x): column j holds coords of [x, basis_j]."""
    cols = []
    for b in graded_basis():
        col = {}
        for r, v in enumerate(basis_coords(bracket(x, b))):
            if v:
                col[r] = v
        cols.append(col)
    return cols


def ad_matrix(x: GradedElement) -> Matrix:
    """Dense 133x133 matrix of y -> [x, y] in the standard basis."""
    cols = ad_columns(x)
    ent = [[_Q0] * DIM_G for _ in range(DIM_G)]
    for j, col in enumerate(cols):
        for r, v in col.items():
            ent[r][j] = v
    return Matrix.from_rows(ent)


def killing_form(x: GradedElement, y: GradedElement) -> Q:
    """trace(ad x . ad y)."""
    return killing_from_columns(ad_columns(x), ad_columns(y))


def killing_from_columns(cols_x: Sequence[Dict[int, Q]],
                         cols_y: Sequence[Dict[int, Q]]) -> Q:
    total = _Q0
    for j, col in enumerate(cols_y):
        for k, v in col.items():
            w = cols_x[k].get(j)
            if w is not None:
                total += w * v
    return total


def scaled_ad(x: GradedElement) -> Tuple[List[List[Tuple[int, int]]], int]:
    """Integer-scaled sparse ad(x): (columns as (row, int) lists, denominator)."""
    cols = ad_columns(x)
    den = 1
    for col in cols:
        for v in col.values():
            d = v.denominator
            den = den * d // gcd(den, d)
    int_cols = [[(r, int(v * den)) for r, v in sorted(col.items())] for col in cols]
    return int_cols, den


def sparse_matvec(int_cols: List[List[Tuple[int, int]]]):
    n = len(int_cols)

    def matvec(v):
        out = [0] * n
        for j, vj in enumerate(v):
            if vj:
                for r, c in int_cols[j]:
                    out[r] += c * vj
        return out

    return matvec


def is_nilpotent(x: GradedElement) -> bool:
    """True iff ad(x) is nilpotent (equivalently ad(x)^133 = 0)."""
    int_cols, _den = scaled_ad(x)
    return exact.is_nilpotent_matvec(sparse_matvec(int_cols), DIM_G)


def is_nilpotent_fourvector(t: FourVector) -> bool:
    return is_nilpotent(GradedElement.odd(t))


# ---------------------------------------------------------------------------
# Jordan decomposition in g

def _poly_apply_scaled(poly: List[Q], matvec, den: int, v: List[int]) -> List[Q]:
    """Evaluate poly(A) v where A = A'/den and matvec is the A' action."""
    deg = len(poly) - 1
    acc = [_Q0] * len(v)
    power = list(v)
    scale = _Q1
    for j, c in enumerate(poly):
        if j:
            power = matvec(power)
            scale /= den
        if c:
            cs = c * scale
            acc = [a + cs * w for a, w in zip(acc, power)]
    return acc


def _annihilates_everywhere(poly: List[Q], matvec, den: int, n: int) -> bool:
    for i in range(n):
        v = [0] * n
        v[i] = 1
        if any(_poly_apply_scaled(poly, matvec, den, v)):
            return False
    return True


def jordan_decompose(x: GradedElement) -> Tuple[GradedElement, GradedElement]:
    """Unique x = s + n with [s, n] = 0, n ad-nilpotent, s ad-semisimple.

    Works from the minimal polynomial of ad(x) (Newton lifting, no root
    extraction), then solves ad(n) = N inside g.  The returned pair is
    certified exactly: commutation, nilpotency of n, and a squarefree
    annihilating polynomial for ad(s) are all verified before returning.
    """
    if x.is_zero():
        return GradedElement.zero(), GradedElement.zero()
    int_cols, den = scaled_ad(x)
    matvec = sparse_matvec(int_cols)
    rng = random.Random(20240)
    probes = [[rng.randint(1, 1 << 16) for _ in range(DIM_G)] for _ in range(2)]
    for attempt in range(2):
        vectors = probes if attempt == 0 else None
        m = exact.min_poly_from_matvec(matvec, DIM_G, den, vectors=vectors)
        result = _jordan_from_min_poly(x, int_cols, den, m)
        if result is not None:
            return result
    raise AssertionError("Jordan decomposition failed; bracket tables inconsistent")


def _jordan_from_min_poly(x, int_cols, den, m):
    matvec = sparse_matvec(int_cols)
    q = exact.semisimple_part_poly(m)
    # N e_j = A e_j - q(A) e_j; stack blocks [n, b_j] = N b_j until full rank
    ident = exact.poly_add([_Q0, _Q1], [-c for c in q])  # t - q(t)
    stacked_rows: List[List[Q]] = []
    rhs: List[Q] = []
    basis = graded_basis()
    probe_order = list(range(56, 63)) + [0, 7, 1] + list(range(63, 70))
    need = DIM_G
    for j in probe_order:
        ej = [0] * DIM_G
        ej[j] = 1
        nv = _poly_apply_scaled(ident, matvec, den, ej)
        block = ad_matrix(basis[j])
        for r in range(DIM_G):
            stacked_rows.append([-block[r, i] for i in range(DIM_G)])
            rhs.append(nv[r])
        if exact.rank(Matrix.from_rows(stacked_rows)) >= need:
            break
    sol = exact.solve_linear(Matrix.from_rows(stacked_rows), rhs)
    if sol is None:
        return None
    n = from_coords(sol[0])
    s = x - n
    # exact certification of the decomposition
    if not bracket(s, n).is_zero():
        return None
    if not is_nilpotent(n):
        return None
    g = exact.squarefree_part(m)
    s_cols, s_den = scaled_ad(s)
    if not _annihilates_everywhere(g, sparse_matvec(s_cols), s_den, DIM_G):
        return None
    if x.part0.is_zero() and not (s.part0.is_zero() and n.part0.is_zero()):
        return None
    return s, n


# ---------------------------------------------------------------------------
# SL(8) conjugation

def det4(rows4) -> Q:
    a, b, c, d = rows4
    return (
        a[0] * (b[1] * (c[2] * d[3] - c[3] * d[2])
                - b[2] * (c[1] * d[3] - c[3] * d[1])
                + b[3] * (c[1] * d[2] - c[2] * d[1]))
        - a[1] * (b[0] * (c[2] * d[3] - c[3] * d[2])
                  - b[2] * (c[0] * d[3] - c[3] * d[0])
                  + b[3] * (c[0] * d[2] - c[2] * d[0]))
        + a[2] * (b[0] * (c[1] * d[3] - c[3] * d[1])
                  - b[1] * (c[0] * d[3] - c[3] * d[0])
                  + b[3] * (c[0] * d[1] - c[1] * d[0]))
        - a[3] * (b[0] * (c[1] * d[2] - c[2] * d[1])
                  - b[1] * (c[0] * d[2] - c[2] * d[0])
                  + b[2] * (c[0] * d[1] - c[1] * d[0])))


def wedge4_transform(p_rows: Sequence[Sequence], t: FourVector) -> FourVector:
    """Apply wedge^4 of the matrix P (given as rows) to a four-vector."""
    rows = [[Q(x) for x in r] for r in p_rows]
    out: Dict[Index4, Q] = {}
    for key, c in t.coeffs.items():
        cols = [k - 1 for k in key]
        for target in INDEX4_BASIS:
            minor = [[rows[r - 1][j] for j in cols] for r in target]
            d = det4(minor)
            if d:
                acc = out.get(target, _Q0) + c * d
                if acc:
                    out[target] = acc
                elif target in out:
                    del out[target]
    return FourVector(out)


def invert8(p_rows: Sequence[Sequence]) -> List[List[Q]]:
    m = Matrix.from_rows(p_rows)
    cols = []
    for j in range(8):
        e = [_Q1 if i == j else _Q0 for i in range(8)]
        sol = exact.solve_linear(m, e)
        if sol is None:
            raise ValueError("matrix is singular")
        cols.append(sol[0])
    return [[cols[j][i] for j in range(8)] for i in range(8)]


def det8(p_rows: Sequence[Sequence]) -> Q:
    rows = [[Q(x) for x in r] for r in p_rows]
    det = _Q1
    for c in range(8):
        piv = next((i for i in range(c, 8) if rows[i][c]), None)
        if piv is None:
            return _Q0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = -det
        det *= rows[c][c]
        inv = rows[c][c]
        for i in range(c + 1, 8):
            if rows[i][c]:
                f = rows[i][c] / inv
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return det


def conjugate_graded(p_rows: Sequence[Sequence], x: GradedElement) -> GradedElement:
    """Adjoint action of P in SL(8): conjugation on sl(8), wedge^4 on g1."""
    if det8(p_rows) != 1:
        raise ValueError("conjugation requires det P = 1")
    pinv = invert8(p_rows)
    a = Matrix.from_rows(p_rows) @ x.part0.to_matrix() @ Matrix.from_rows(pinv)
    return GradedElement(Operator(a.row_lists()), wedge4_transform(p_rows, x.part1))


def random_unimodular(rng: random.Random, shears: int = 10) -> List[List[int]]:
    """Random element of SL(8, Z) as a product of elementary shears."""
    m = [[1 if i == j else 0 for j in range(8)] for i in range(8)]
    for _ in range(shears):
        i, j = rng.sample(range(8), 2)
        c = rng.choice((-1, 1))
        for k in range(8):
            m[i][k] += c * m[j][k]
    return m
