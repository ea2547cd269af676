"""Graded subalgebras attached to the mixed families 2, 3, 9, 11, 12, 18, 19
and verification of their nilpotent-part tables.

Each subalgebra is cut out of g by explicit linear constraints: the
symplectic form B = e^1^e^2 + e^3^e^4 + e^5^e^6 + e^7^e^8 and its
contraction condition on four-vectors, block decompositions of V, the
symmetric-square embedding through a four-dimensional auxiliary space W,
and the volume/Q constraints for the smallest family.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, List, Optional, Sequence, Tuple

from . import exact
from .algebra import (FourVector, GradedElement, Operator, bracket00,
                      bracket01, bracket11, graded_basis, sort_with_sign)
from .atlas import get_atlas
from .nilpotent import Sl2Triple, eigenspace, random_sl2_for_h
from .report import CheckResult, FAIL, INCONCLUSIVE, OK, WARN
from .roots import parse_p_notation, cartan_subspace

FAMILY_NUMBERS = (2, 3, 9, 11, 12, 18, 19)

# expected dimensions (dim g0, dim g1) forced by the family's type
EXPECTED_DIMS = {2: (36, 42), 3: (30, 36), 9: (20, 25), 11: (15, 20),
                 12: (15, 20), 18: (12, 16), 19: (10, 14)}

TYPE_LABELS = {2: "E6", 3: "D6", 9: "D5", 11: "A5", 12: "A5", 18: "D4", 19: "A4"}

SIMPLE_ROOTS = {
    2: ((1, 3), (3, 5), (5, 7), (7, 8)),
    3: ((1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8)),
    9: ((1, 3), (3, 4), (5, 7), (7, 8)),
    11: ((1, 3), (3, 5), (5, 7)),
    12: ((1, 2), (2, 3), (3, 4)),
    18: ((1, 2), (3, 4), (5, 6), (7, 8)),
    # printed as "eps_1-eps_3, eps_4-eps_4"; the second root must be
    # eps_3-eps_4 for g0 to be of type C2 with a 2-dimensional Cartan
    19: ((1, 3), (3, 4)),
}

_B_PAIRS = ((1, 2), (3, 4), (5, 6), (7, 8))


@dataclass
class SubalgebraSpec:
    family: int
    basis0: List[Operator]
    basis1: List[FourVector]
    cartan: List[Operator]
    simple_roots: Tuple[Tuple[int, int], ...]
    type_label: str

    @property
    def dims(self) -> Tuple[int, int]:
        return len(self.basis0), len(self.basis1)


def _sl8_basis_ops() -> List[Operator]:
    return [b.part0 for b in graded_basis()[:63]]


def _op_entries(a: Operator) -> List[Q]:
    return [x for row in a.rows for x in row]


def _fv_coords(t: FourVector) -> List[Q]:
    from .algebra import INDEX4_BASIS, INDEX4_POS
    row = [Q(0)] * 70
    for k, v in t.coeffs.items():
        row[INDEX4_POS[k]] = v
    return row


def _combine_ops(coeffs: Sequence[Q], ops: Sequence[Operator]) -> Operator:
    out = Operator.zero()
    for c, op in zip(coeffs, ops):
        if c:
            out = out + op.scale(c)
    return out


def _combine_fvs(coeffs: Sequence[Q], vecs: Sequence[FourVector]) -> FourVector:
    out = FourVector()
    for c, t in zip(coeffs, vecs):
        if c:
            out = out + t.scale(c)
    return out


def _symplectic_defect(x: Operator) -> List[Q]:
    """Upper triangle of X^t B + B X (antisymmetric, so 28 entries)."""
    b = [[Q(0)] * 8 for _ in range(8)]
    for i, j in _B_PAIRS:
        b[i - 1][j - 1], b[j - 1][i - 1] = Q(1), Q(-1)
    rows = x.rows
    out = []
    for i in range(8):
        for j in range(i + 1, 8):
            s = Q(0)
            for t in range(8):
                s += rows[t][i] * b[t][j] + b[i][t] * rows[t][j]
            out.append(s)
    return out


def b_contraction(t: FourVector) -> List[Q]:
    """T^{srij} B_{sr} for each i < j (28 values)."""
    out = []
    for i in range(1, 9):
        for j in range(i + 1, 9):
            s = Q(0)
            for a, b in _B_PAIRS:
                if len({a, b, i, j}) == 4:
                    sign, key = sort_with_sign((a, b, i, j))
                    c = t.coeffs.get(key)
                    if c:
                        s += 2 * sign * c
            out.append(s)
    return out


def _kernel_ops(ops: Sequence[Operator], constraint) -> List[Operator]:
    cols = [constraint(op) for op in ops]
    mat = exact.Matrix.from_rows([[cols[j][r] for j in range(len(cols))]
                                  for r in range(len(cols[0]))])
    return [_combine_ops(k, ops) for k in exact.kernel_basis(mat)]


def _kernel_fvs(vecs: Sequence[FourVector], constraint) -> List[FourVector]:
    cols = [constraint(t) for t in vecs]
    mat = exact.Matrix.from_rows([[cols[j][r] for j in range(len(cols))]
                                  for r in range(len(cols[0]))])
    return [_combine_fvs(k, vecs) for k in exact.kernel_basis(mat)]


# -- block bases -------------------------------------------------------------

def _block_ops_34() -> List[Operator]:
    """Basis of L0(W1) + L0(W2) for W1 = <e1..e4>, W2 = <e5..e8>."""
    ops = []
    for lo, hi in ((1, 4), (5, 8)):
        for i in range(lo, hi + 1):
            for j in range(lo, hi + 1):
                if i != j:
                    ops.append(Operator.elementary(i, j))
        for i in range(lo, hi):
            d = [0] * 8
            d[i - 1], d[i] = 1, -1
            ops.append(Operator.diagonal(d))
    return ops


def _wedge22_monomials(w1: Sequence[int], w2: Sequence[int]) -> List[FourVector]:
    out = []
    for a, b in itertools.combinations(w1, 2):
        for c, d in itertools.combinations(w2, 2):
            out.append(FourVector.from_terms([(1, (a, b, c, d))]))
    return out


# -- the symmetric-square embedding through W (families 12 and 19) -----------

_BIVS = tuple(itertools.combinations(range(1, 5), 2))  # basis of wedge^2 W
_S2_PAIRS = tuple((i, j) for i in range(6) for j in range(i, 6))
# phi1(f_k) = e_k, phi2(f_k) = e_{9-k}


def _phi_image(i: int, j: int) -> FourVector:
    a, b = _BIVS[i]
    c, d = _BIVS[j]
    return FourVector.from_terms([(1, (a, b, 9 - c, 9 - d)),
                                  (1, (9 - a, 9 - b, c, d))])


def _sym2_images() -> List[FourVector]:
    return [_phi_image(i, j) for i, j in _S2_PAIRS]


def _volume_constraint_row() -> List[Q]:
    """Contraction of S^2(wedge^2 W) with the dual volume form of W."""
    row = []
    for i, j in _S2_PAIRS:
        u, v = _BIVS[i], _BIVS[j]
        if i != j and not set(u) & set(v):
            from .algebra import perm_sign
            row.append(Q(perm_sign(u + v)))
        else:
            row.append(Q(0))
    return row


def _q_constraint_rows() -> List[List[Q]]:
    """Contraction with Q = f^1^f^2 + f^3^f^4, one row per wedge^2 W coordinate.

    The embedded square u.u stands for the polarized tensor 2 u(x)u, so
    diagonal coordinates weigh twice as much as off-diagonal ones.
    """
    qhat = {(1, 2): Q(1), (3, 4): Q(1)}
    rows = []
    for w in range(6):
        row = []
        for i, j in _S2_PAIRS:
            c = Q(0)
            if i == j:
                if i == w:
                    c = 4 * qhat.get(_BIVS[i], Q(0))
            else:
                if j == w:
                    c += 2 * qhat.get(_BIVS[i], Q(0))
                if i == w:
                    c += 2 * qhat.get(_BIVS[j], Q(0))
            row.append(c)
        rows.append(row)
    return rows


def _embed_w_operator(a_rows: Sequence[Sequence[Q]]) -> Operator:
    """A in L(W) as the doubled operator on (e1..e4; e8,e7,e6,e5)."""
    rows = [[Q(0)] * 8 for _ in range(8)]
    for l in range(4):
        for k in range(4):
            rows[l][k] = Q(a_rows[l][k])
            rows[8 - l - 1][8 - k - 1] = Q(a_rows[l][k])
    return Operator(rows)


def _gl4_basis() -> List[List[List[Q]]]:
    out = []
    for i in range(4):
        for j in range(4):
            m = [[Q(0)] * 4 for _ in range(4)]
            m[i][j] = Q(1)
            out.append(m)
    return out


# -- family constructions -----------------------------------------------------

def build_family(k: int) -> SubalgebraSpec:
    """Construct the graded subalgebra of family k from its defining constraints."""
    if k not in FAMILY_NUMBERS:
        raise ValueError(f"no mixed-family construction for k={k}")
    from .algebra import INDEX4_BASIS
    monomials = [FourVector({s: Q(1)}) for s in INDEX4_BASIS]
    if k == 2:
        basis0 = _kernel_ops(_sl8_basis_ops(), _symplectic_defect)
        basis1 = _kernel_fvs(monomials, b_contraction)
    elif k == 3:
        basis0 = _block_ops_34()
        basis1 = _wedge22_monomials(range(1, 5), range(5, 9))
    elif k == 9:
        basis0 = _kernel_ops(_block_ops_34(), _symplectic_defect)
        basis1 = _kernel_fvs(_wedge22_monomials(range(1, 5), range(5, 9)),
                             b_contraction)
    elif k == 11:
        odd, even = (1, 3, 5, 7), (2, 4, 6, 8)
        basis0 = []
        for a in range(4):
            for b in range(4):
                if a != b:
                    rows = [[Q(0)] * 8 for _ in range(8)]
                    rows[odd[a] - 1][odd[b] - 1] = Q(1)
                    rows[even[b] - 1][even[a] - 1] = Q(-1)
                    basis0.append(Operator(rows))
        for a in range(3):
            d = [Q(0)] * 8
            d[odd[a] - 1], d[even[a] - 1] = Q(1), Q(-1)
            d[odd[a + 1] - 1], d[even[a + 1] - 1] = Q(-1), Q(1)
            basis0.append(Operator.diagonal(d))
        basis1 = _kernel_fvs(_wedge22_monomials(odd, even), b_contraction)
    elif k == 12:
        basis0 = []
        gl4 = _gl4_basis()
        for m in gl4:
            if any(m[i][j] for i in range(4) for j in range(4) if i != j):
                basis0.append(_embed_w_operator(m))
        for i in range(3):
            m = [[Q(0)] * 4 for _ in range(4)]
            m[i][i], m[i + 1][i + 1] = Q(1), Q(-1)
            basis0.append(_embed_w_operator(m))
        images = _sym2_images()
        mat = exact.Matrix.from_rows([_volume_constraint_row()])
        basis1 = [_combine_fvs(kvec, images) for kvec in exact.kernel_basis(mat)]
    elif k == 18:
        basis0 = []
        for lo in (1, 3, 5, 7):
            basis0.append(Operator.elementary(lo, lo + 1))
            basis0.append(Operator.elementary(lo + 1, lo))
            d = [0] * 8
            d[lo - 1], d[lo] = 1, -1
            basis0.append(Operator.diagonal(d))
        basis1 = [FourVector.from_terms([(1, (a, b, c, d))])
                  for a in (1, 2) for b in (3, 4) for c in (5, 6) for d in (7, 8)]
    else:  # k == 19
        qmat = [[Q(0)] * 4 for _ in range(4)]
        qmat[0][1], qmat[1][0] = Q(1), Q(-1)
        qmat[2][3], qmat[3][2] = Q(1), Q(-1)

        def sp4_defect(m):
            out = []
            for i in range(4):
                for j in range(i + 1, 4):
                    s = Q(0)
                    for t in range(4):
                        s += m[t][i] * qmat[t][j] + qmat[i][t] * m[t][j]
                    out.append(s)
            return out

        gl4 = _gl4_basis()
        cols = [sp4_defect(m) for m in gl4]
        mat = exact.Matrix.from_rows([[cols[j][r] for j in range(16)]
                                      for r in range(6)])
        basis0 = []
        for kvec in exact.kernel_basis(mat):
            m = [[sum((kvec[4 * i + j] * gl4[4 * i + j][i2][j2]
                       for i in range(4) for j in range(4)), Q(0))
                  for j2 in range(4)] for i2 in range(4)]
            basis0.append(_embed_w_operator(m))
        images = _sym2_images()
        rows = [_volume_constraint_row()] + _q_constraint_rows()
        mat = exact.Matrix.from_rows(rows)
        basis1 = [_combine_fvs(kvec, images) for kvec in exact.kernel_basis(mat)]
    cartan = _diagonal_members(basis0)
    spec = SubalgebraSpec(k, basis0, basis1, cartan, SIMPLE_ROOTS[k], TYPE_LABELS[k])
    if spec.dims != EXPECTED_DIMS[k]:
        raise AssertionError(f"family {k} dims {spec.dims} != {EXPECTED_DIMS[k]}")
    if len(cartan) != len(SIMPLE_ROOTS[k]):
        raise AssertionError(f"family {k} Cartan dim {len(cartan)}")
    return spec


def _diagonal_members(ops: Sequence[Operator]) -> List[Operator]:
    """Basis of the diagonal part of span(ops)."""

    def offdiag(x: Operator) -> List[Q]:
        return [x.rows[i][j] for i in range(8) for j in range(8) if i != j]

    return _kernel_ops(list(ops), offdiag)


def check_subalgebra(spec: SubalgebraSpec) -> List[CheckResult]:
    """Exact bracket-closure of the graded subalgebra."""
    span0 = exact.RowSpace([_op_entries(op) for op in spec.basis0])
    span1 = exact.RowSpace([_fv_coords(t) for t in spec.basis1])
    out = [CheckResult(f"family {spec.family} dims", OK,
                       f"g0 {span0.dim}, g1 {span1.dim}")]
    bad00 = sum(1 for a, b in itertools.combinations(spec.basis0, 2)
                if not span0.contains(_op_entries(bracket00(a, b))))
    bad01 = sum(1 for a in spec.basis0 for t in spec.basis1
                if not span1.contains(_fv_coords(bracket01(a, t))))
    bad11 = sum(1 for t1, t2 in itertools.combinations(spec.basis1, 2)
                if not span0.contains(_op_entries(bracket11(t1, t2))))
    for label, bad in (("[g0,g0] in g0", bad00), ("[g0,g1] in g1", bad01),
                       ("[g1,g1] in g0", bad11)):
        out.append(CheckResult(f"family {spec.family} {label}",
                               OK if bad == 0 else FAIL,
                               "closed" if bad == 0 else f"{bad} products escape"))
    return out


def family_characteristic_to_h(k: int, marks: Sequence[int],
                               spec: Optional[SubalgebraSpec] = None) -> Operator:
    """The unique h in the family Cartan with the given simple-root values."""
    spec = spec or build_family(k)
    if len(marks) != len(spec.cartan):
        raise ValueError(f"family {k} expects {len(spec.cartan)} marks")
    rows = []
    for i, j in spec.simple_roots:
        rows.append([c.diagonal_entries()[i - 1] - c.diagonal_entries()[j - 1]
                     for c in spec.cartan])
    sol = exact.solve_linear(exact.Matrix.from_rows(rows), [Q(m) for m in marks])
    if sol is None or sol[1]:
        raise AssertionError(f"family {k} simple-root system is singular")
    return _combine_ops(sol[0], spec.cartan)


def canonical_p_basis(k: int) -> List[FourVector]:
    """The family's canonical Cartan-subspace basis as four-vectors."""
    ps = cartan_subspace()
    out = []
    for coords in parse_p_notation(get_atlas().family_record(k).basis_text):
        out.append(_combine_fvs([Q(c) for c in coords], ps))
    return out


def verify_family_table(k: int, seed: int = 42, retries: int = 20,
                        spec: Optional[SubalgebraSpec] = None) -> List[CheckResult]:
    """Randomized restricted sl2 verification of every table row.

    Each row's h is realized in the family Cartan; e is drawn from the
    2-eigenspace intersected with g1 of the family and f solved inside the
    (-2)-eigenspace intersection.  A row that fails all retries is
    INCONCLUSIVE (counted as a failure), never a disproof.
    """
    spec = spec or build_family(k)
    atlas = get_atlas()
    out = []
    seen_marks: Dict[Tuple[int, ...], int] = {}
    for row in atlas.mixed_table(k):
        name = f"family {k} row {row.number}"
        dup = seen_marks.get(row.marks)
        seen_marks[row.marks] = row.number
        h = family_characteristic_to_h(k, row.marks, spec)
        triple = random_sl2_for_h(h, restriction=spec.basis1,
                                  seed=(seed, k, row.number).__hash__() & 0x7FFFFFFF,
                                  retries=retries)
        if triple is None:
            out.append(CheckResult(name, INCONCLUSIVE,
                                   f"no sl2 found in {retries} draws"))
            continue
        triple.validate()
        detail = f"marks {''.join(map(str, row.marks))} realize an sl2 in g1"
        if dup is not None:
            detail += f"; marks duplicated with row {dup} (stored verbatim)"
        out.append(CheckResult(name, OK, detail))
    return out


def verify_family_intersections() -> List[CheckResult]:
    """g(9) = g(2) ^ g(3) and g(19) = g(2) ^ g(12), as exact spans."""
    specs = {k: build_family(k) for k in (2, 3, 9, 12, 19)}
    out = []
    for k, (ka, kb) in ((9, (2, 3)), (19, (2, 12))):
        ok = True
        for part, coords in (("g0", _op_entries), ("g1", _fv_coords)):
            mine = [coords(x) for x in
                    (specs[k].basis0 if part == "g0" else specs[k].basis1)]
            inter = exact.span_intersection(
                [coords(x) for x in (specs[ka].basis0 if part == "g0"
                                     else specs[ka].basis1)],
                [coords(x) for x in (specs[kb].basis0 if part == "g0"
                                     else specs[kb].basis1)])
            space = exact.RowSpace(inter)
            if space.dim != len(mine) or not all(space.contains(v) for v in mine):
                ok = False
        out.append(CheckResult(
            f"g({k}) = g({ka}) ^ g({kb})", OK if ok else FAIL,
            "exact span equality" if ok else "span mismatch"))
    return out


def verify_commuting_p(k: int, spec: Optional[SubalgebraSpec] = None) -> CheckResult:
    """[p, t] = 0 for the canonical family p's and every g1 basis vector."""
    spec = spec or build_family(k)
    bad = sum(1 for p in canonical_p_basis(k) for t in spec.basis1
              if not bracket11(p, t).is_zero())
    return CheckResult(f"family {k} centralizes its p", OK if bad == 0 else FAIL,
                       "all brackets vanish" if bad == 0 else f"{bad} nonzero")
