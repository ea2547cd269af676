"""Characteristics, sl2 triples, stabilizer dimensions, and the
classification of nilpotent four-vectors against the embedded tables.

A characteristic is the diagonal semisimple member h of an sl2 triple
(h, e, f) through a nilpotent e, encoded by its non-negative numerical
marks on the simple roots eps_1-eps_2, ..., eps_7-eps_8.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import List, Optional, Sequence, Tuple

from . import exact
from .algebra import (FourVector, GradedElement, Index4, INDEX4_BASIS, Operator,
                      bracket01, bracket11, graded_basis, invert8,
                      wedge4_transform)
from .atlas import get_atlas, marks_to_string, parse_marks
from .report import CheckResult, FAIL, OK


@dataclass(frozen=True)
class Characteristic:
    marks: Tuple[int, ...]

    def __post_init__(self):
        if len(self.marks) != 7 or any(m < 0 or m != int(m) for m in self.marks):
            raise ValueError("need 7 non-negative integer marks")

    @classmethod
    def parse(cls, text: str) -> "Characteristic":
        return cls(parse_marks(text))

    def __str__(self) -> str:
        return marks_to_string(self.marks)

    def reversed(self) -> "Characteristic":
        return Characteristic(tuple(reversed(self.marks)))


@dataclass(frozen=True)
class Sl2Triple:
    h: Operator
    e: FourVector
    f: FourVector

    def validate(self) -> None:
        """Assert [h,e] = 2e, [h,f] = -2f, [e,f] = h, exactly."""
        if bracket01(self.h, self.e) != self.e.scale(2):
            raise AssertionError("[h, e] != 2e")
        if bracket01(self.h, self.f) != self.f.scale(-2):
            raise AssertionError("[h, f] != -2f")
        if bracket11(self.e, self.f) != self.h:
            raise AssertionError("[e, f] != h")


def characteristic_to_h(marks: Characteristic | Sequence[int]) -> Operator:
    """The unique traceless diagonal h whose consecutive differences are the marks."""
    m = marks.marks if isinstance(marks, Characteristic) else tuple(marks)
    tails = [sum(m[i:]) for i in range(7)] + [0]
    shift = Q(-sum(tails), 8)
    return Operator.diagonal([t + shift for t in tails])


def h_to_characteristic(h: Operator) -> Characteristic:
    """Marks of the diagonal sorted in non-increasing order."""
    if not h.is_diagonal():
        raise ValueError("characteristic extraction needs a diagonal operator")
    d = sorted(h.diagonal_entries(), reverse=True)
    marks = []
    for i in range(7):
        step = d[i] - d[i + 1]
        if step.denominator != 1:
            raise ValueError("characteristic has non-integer marks")
        marks.append(int(step))
    return Characteristic(tuple(marks))


def eigenspace(h: Operator, lam) -> List[Index4]:
    """Basis monomials e_S with partial trace sum_{i in S} h_ii equal to lam."""
    if not h.is_diagonal():
        raise ValueError("eigenspace needs a diagonal operator")
    d = h.diagonal_entries()
    lam = Q(lam)
    return [s for s in INDEX4_BASIS if sum(d[i - 1] for i in s) == lam]


def _monomial_span(keys: Sequence[Index4]) -> List[List[Q]]:
    rows = []
    for k in keys:
        row = [Q(0)] * 70
        row[INDEX4_BASIS.index(k)] = Q(1)
        rows.append(row)
    return rows


def _fv_coords(t: FourVector) -> List[Q]:
    row = [Q(0)] * 70
    for k, v in t.coeffs.items():
        row[INDEX4_BASIS.index(k)] = v
    return row


def _fv_from_coords(coords: Sequence[Q]) -> FourVector:
    return FourVector({INDEX4_BASIS[i]: Q(c) for i, c in enumerate(coords) if c})


def _restricted_space(keys: Sequence[Index4],
                      restriction: Optional[Sequence[FourVector]]) -> List[FourVector]:
    """Basis of span(monomials) or its intersection with span(restriction)."""
    if restriction is None:
        return [FourVector({k: Q(1)}) for k in keys]
    inter = exact.span_intersection(_monomial_span(keys),
                                    [_fv_coords(t) for t in restriction])
    return [_fv_from_coords(v) for v in inter]


def _op_coords(a: Operator) -> List[Q]:
    return [x for row in a.rows for x in row]


def solve_f(h: Operator, e: FourVector,
            restriction: Optional[Sequence[FourVector]] = None) -> Optional[FourVector]:
    """Solve [e, f] = h for f supported on the (-2)-eigenspace of h.

    [h, f] = -2f then holds automatically.  With `restriction`, f is drawn
    from the intersection of that eigenspace with the given span.  Returns
    the solution with free variables zeroed, or None when inconsistent.
    """
    if bracket01(h, e) != e.scale(2):
        raise ValueError("[h, e] = 2e violated")
    candidates = _restricted_space(eigenspace(h, -2), restriction)
    if not candidates:
        return None
    cols = [_op_coords(bracket11(e, u)) for u in candidates]
    mat = exact.Matrix.from_rows([[cols[j][r] for j in range(len(cols))]
                                  for r in range(64)])
    sol = exact.solve_linear(mat, _op_coords(h))
    if sol is None:
        return None
    f = FourVector()
    for x, u in zip(sol[0], candidates):
        if x:
            f = f + u.scale(x)
    return f


def _rational_roots(poly: List[Q]) -> List[Q]:
    """All rational roots of the polynomial, by the rational root theorem."""
    ints = exact._int_row(list(poly))
    while ints and ints[0] == 0:
        ints = ints[1:]  # factor out t; 0 handled by caller via poly_eval
    roots = []
    if exact.poly_eval(poly, Q(0)) == 0:
        roots.append(Q(0))
    if not ints:
        return roots
    lead, const = abs(ints[-1]), abs(ints[0])

    def divisors(n):
        out = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
        return sorted(set(out + [n // d for d in out]))

    for p in divisors(const):
        for q in divisors(lead):
            for cand in (Q(p, q), Q(-p, q)):
                if exact.poly_eval(poly, cand) == 0 and cand not in roots:
                    roots.append(cand)
    return roots


def _diagonalize_semisimple(h: Operator) -> Tuple[List[List[Q]], Operator]:
    """P with det 1 and P^-1 h P diagonal, eigenvalues in non-increasing order.

    Raises when h fails to split over Q with a squarefree minimal
    polynomial (not expected for genuine characteristics).
    """
    m = h.to_matrix()
    mp = exact.minimal_polynomial(m)
    roots = _rational_roots(mp)
    if len(roots) != len(mp) - 1:
        raise ValueError("characteristic does not split over Q")
    roots.sort(reverse=True)
    columns: List[List[Q]] = []
    diag: List[Q] = []
    ident = exact.Matrix.identity(8)
    for lam in roots:
        ker = exact.kernel_basis(m - ident.scale(lam))
        for v in ker:
            columns.append(v)
            diag.append(lam)
    if len(columns) != 8:
        raise ValueError("semisimple diagonalization failed")
    p_rows = [[columns[j][i] for j in range(8)] for i in range(8)]
    from .algebra import det8
    d = det8(p_rows)
    if d == 0:
        raise ValueError("eigenbasis is singular")
    p_rows = [[x / d if j == 0 else x for j, x in enumerate(row)] for row in p_rows]
    return p_rows, Operator.diagonal(diag)


def complete_sl2(e: FourVector) -> Optional[Sl2Triple]:
    """Complete a nonzero nilpotent e to an sl2 triple with diagonal h.

    Solves [[e, f'], e] = 2e for f' over all of wedge^4 V; inconsistency
    means e is zero or not nilpotent and None is returned.  When the
    resulting h = [e, f'] is not diagonal it is conjugated into the
    diagonal subalgebra (the triple returned is then the conjugated one).
    """
    if e.is_zero():
        return None
    cols = []
    for s in INDEX4_BASIS:
        u = FourVector({s: Q(1)})
        cols.append(_fv_coords(bracket01(bracket11(e, u), e)))
    mat = exact.Matrix.from_rows([[cols[j][r] for j in range(70)]
                                  for r in range(70)])
    sol = exact.solve_linear(mat, _fv_coords(e.scale(2)))
    if sol is None:
        return None
    fprime = _fv_from_coords(sol[0])
    h = bracket11(e, fprime)
    if not h.is_diagonal():
        p_rows, h_diag = _diagonalize_semisimple(h)
        pinv = invert8(p_rows)
        e = wedge4_transform(pinv, e)
        h = h_diag
        if bracket01(h, e) != e.scale(2):
            raise AssertionError("conjugation lost the eigenvalue relation")
    f = solve_f(h, e)
    if f is None:
        return None
    return Sl2Triple(h, e, f)


def random_sl2_for_h(h: Operator,
                     restriction: Optional[Sequence[FourVector]] = None,
                     seed: int = 42, retries: int = 20) -> Optional[Sl2Triple]:
    """Try random rational e in the 2-eigenspace (within `restriction`)."""
    if not h.is_diagonal():
        raise ValueError("random_sl2_for_h needs a diagonal h")
    space = _restricted_space(eigenspace(h, 2), restriction)
    if not space:
        return None
    rng = random.Random(seed)
    for _ in range(max(1, retries)):
        e = FourVector()
        for u in space:
            e = e + u.scale(rng.randint(1, 97))
        if e.is_zero():
            continue
        f = solve_f(h, e, restriction)
        if f is not None:
            return Sl2Triple(h, e, f)
    return None


def search_normal_form(h: Operator, max_support: int = 7,
                       cap: int = 10_000_000) -> Optional[FourVector]:
    """First 0/1 combination of 2-eigenspace monomials with independent
    roots whose bracket system [e, f] = h is solvable.

    Enumeration is by support size, lexicographic within each size.
    Exceeding `cap` subsets raises instead of silently truncating.
    """
    keys = eigenspace(h, 2)
    centered = {}
    for k in keys:
        v = [0] * 8
        for i in k:
            v[i - 1] = 1
        centered[k] = tuple(8 * x - 4 for x in v)
    seen = 0
    for size in range(1, max_support + 1):
        for subset in itertools.combinations(keys, size):
            seen += 1
            if seen > cap:
                raise RuntimeError(f"enumeration cap {cap} exceeded")
            if exact.RowSpace([centered[k] for k in subset]).dim != size:
                continue
            e = FourVector({k: Q(1) for k in subset})
            if solve_f(h, e) is not None:
                return e
    return None


def stabilizer_dim(e: FourVector) -> int:
    """dim of the annihilator {X in sl(8) : [X, e] = 0}."""
    ops = [b.part0 for b in graded_basis()[:63]]
    cols = [_fv_coords(bracket01(op, e)) for op in ops]
    mat = exact.Matrix.from_rows([[cols[j][r] for j in range(63)]
                                  for r in range(70)])
    return 63 - exact.rank(mat)


def orbit_dim(e: FourVector) -> int:
    return 63 - stabilizer_dim(e)


def classify_nilpotent(e: FourVector) -> Tuple[int, Sl2Triple]:
    """Orbit number whose characteristic matches e's, plus the triple.

    The match is by dominant characteristic (all 94 table characteristics
    are pairwise distinct, so the lookup is well defined on the table);
    this is reported as a characteristic match, not a proven conjugation.
    """
    if e.is_zero():
        raise ValueError("zero four-vector has no orbit number")
    triple = complete_sl2(e)
    if triple is None:
        raise ValueError("input is not a nonzero nilpotent four-vector")
    marks = h_to_characteristic(triple.h)
    number = get_atlas().orbit_by_marks(marks.marks)
    if number is None:
        raise ValueError(f"unrecognized characteristic {marks}")
    return number, triple


def verify_nilpotent_tables() -> List[CheckResult]:
    """Per normal-form row: eigenvalue relation, solvable f, and dimensions."""
    atlas = get_atlas()
    out = []
    for n in sorted(atlas.orbits):
        rec = atlas.orbits[n]
        h = characteristic_to_h(rec.marks)
        e = rec.normal_form
        problems = []
        if bracket01(h, e) != e.scale(2):
            problems.append("[h,e] != 2e")
        else:
            f = solve_f(h, e)
            if f is None:
                problems.append("no f with [e,f] = h")
            else:
                Sl2Triple(h, e, f).validate()
        dim = orbit_dim(e)
        if dim != rec.dim:
            problems.append(f"orbit dim {dim} != {rec.dim}")
        if rec.d is not None and 63 - dim != rec.d:
            problems.append(f"stabilizer dim {63 - dim} != d = {rec.d}")
        if problems:
            out.append(CheckResult(f"orbit {n}", FAIL, "; ".join(problems)))
        else:
            out.append(CheckResult(f"orbit {n}", OK, f"dim {dim}"))
    return out
