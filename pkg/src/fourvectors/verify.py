"""Verification suites behind `fourvectors verify`.

Each suite returns a list of CheckResult lines; a suite passes when no
line FAILs (INCONCLUSIVE counts as failure, WARN does not).  Row-parallel
suites accept a `jobs` argument; results are emitted in deterministic
order regardless of worker count.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction as Q
from typing import Callable, List, Optional, Sequence

from . import atlas as atlas_mod
from . import exact, families, nilpotent, roots
from .algebra import (DIM_G, FourVector, GradedElement, Operator, bracket,
                      bracket01, bracket11, graded_basis, ad_columns,
                      killing_from_columns, is_nilpotent, jordan_decompose,
                      random_unimodular, scaled_ad, sparse_matvec,
                      wedge4_transform)
from .report import CheckResult, FAIL, INCONCLUSIVE, OK, WARN

SUITES = ("structure", "table1", "table2", "nnforms", "families", "hasse", "all")


def _random_graded(rng: random.Random, terms: int = 5) -> GradedElement:
    rows = [[0] * 8 for _ in range(8)]
    for _ in range(terms):
        i, j = rng.sample(range(8), 2)
        rows[i][j] = rng.randint(-9, 9)
    diag = [rng.randint(-4, 4) for _ in range(7)]
    diag.append(-sum(diag))
    for i in range(8):
        rows[i][i] = diag[i]
    fv = FourVector.from_terms(
        [(rng.randint(-9, 9), tuple(rng.sample(range(1, 9), 4)))
         for _ in range(terms)])
    return GradedElement(Operator(rows), fv)


def suite_structure(seed: int = 42, jobs: int = 1) -> List[CheckResult]:
    out = []
    basis = graded_basis()
    out.append(CheckResult("dim g", OK if len(basis) == DIM_G else FAIL,
                           f"{len(basis)}"))
    ads = [ad_columns(b) for b in basis]
    gram = [[killing_from_columns(ads[i], ads[j]) for j in range(DIM_G)]
            for i in range(DIM_G)]
    r = exact.rank(exact.Matrix.from_rows(gram))
    out.append(CheckResult("killing gram rank", OK if r == DIM_G else FAIL, f"{r}"))
    all_roots = roots.roots_of_g()
    out.append(CheckResult("root count", OK if len(all_roots) == 126 else FAIL,
                           f"{len(all_roots)}"))
    try:
        typ = roots.classify_d_roots(all_roots)
        ok = str(typ) == "E7" and len(roots.simple_system_of_g()) == 7
    except ValueError:
        ok = False
    out.append(CheckResult("simple system", OK if ok else FAIL,
                           "Cartan matrix of type E7"))
    rng = random.Random(seed)
    bad = 0
    for _ in range(200):
        x, y, z = (_random_graded(rng) for _ in range(3))
        j = (bracket(x, bracket(y, z)) + bracket(y, bracket(z, x))
             + bracket(z, bracket(x, y)))
        if not j.is_zero():
            bad += 1
    out.append(CheckResult("jacobi identity", OK if bad == 0 else FAIL,
                           f"200 seeded triples, {bad} violations"))
    # Cartan subspace: 21 commuting pairs, no p_i nilpotent
    ps = roots.cartan_subspace()
    bad = sum(1 for a, b in itertools.combinations(ps, 2)
              if not bracket11(a, b).is_zero())
    out.append(CheckResult("cartan subspace commutes",
                           OK if bad == 0 else FAIL, f"{bad} of 21 pairs fail"))
    nil = sum(1 for p in ps if is_nilpotent(GradedElement.odd(p)))
    out.append(CheckResult("cartan subspace semisimple",
                           OK if nil == 0 else FAIL,
                           f"{nil} of 7 generators nilpotent"))
    out += _jordan_examples()
    return out


def _jordan_examples() -> List[CheckResult]:
    out = []
    ps = roots.cartan_subspace()
    p1 = ps[0]
    s, n = jordan_decompose(GradedElement.odd(p1))
    ok = s == GradedElement.odd(p1) and n.is_zero()
    out.append(CheckResult("jordan of a semisimple element",
                           OK if ok else FAIL, "(p1, 0)"))
    e = FourVector.monomial(1, 2, 3, 4)
    s, n = jordan_decompose(GradedElement.odd(e))
    ok = s.is_zero() and n == GradedElement.odd(e)
    out.append(CheckResult("jordan of a nilpotent element",
                           OK if ok else FAIL, "(0, e1234)"))
    p = (ps[0] + ps[2] - ps[6]).scale(2)
    x = GradedElement.odd(p + FourVector.monomial(1, 3, 5, 7))
    s, n = jordan_decompose(x)
    checks = [s + n == x or (s + n).part1 == x.part1,
              bracket(s, n).is_zero(),
              is_nilpotent(n),
              s == GradedElement.odd(p)]
    sq = _squarefree_ad_min_poly(s)
    checks.append(sq)
    ok = all(checks)
    out.append(CheckResult("jordan of a mixed element", OK if ok else FAIL,
                           "parts commute, n ad-nilpotent, ad(s) min poly squarefree"
                           if ok else f"checks {checks}"))
    return out


def _squarefree_ad_min_poly(s: GradedElement) -> bool:
    cols, den = scaled_ad(s)
    m = exact.min_poly_from_matvec(sparse_matvec(cols), DIM_G, den)
    return exact.poly_gcd(m, exact.poly_deriv(m)) == [Q(1)]


def suite_table1(seed: int = 42, jobs: int = 1) -> List[CheckResult]:
    return roots.verify_table1(seed)


def suite_table2(seed: int = 42, jobs: int = 1) -> List[CheckResult]:
    """Data-level consistency of the class table against the normal forms."""
    atl = atlas_mod.get_atlas()
    out = []
    marks = [atl.orbits[n].marks for n in sorted(atl.orbits)]
    out.append(CheckResult("characteristics distinct",
                           OK if len(set(marks)) == 94 else FAIL,
                           f"{len(set(marks))} of 94"))
    for n in atl.table2_numbers():
        rec = atl.orbit_record(n)
        problems = []
        if rec.dim != 63 - rec.d:
            problems.append(f"dim {rec.dim} != 63 - {rec.d}")
        computed = nilpotent.orbit_dim(rec.normal_form)
        if computed != rec.dim:
            problems.append(f"computed dim {computed}")
        if rec.d_corrected and computed == 63 - rec.d_original:
            problems.append("original d did not fail")
        detail = f"d = {rec.d}" + (" (corrected)" if rec.d_corrected else "")
        out.append(CheckResult(f"class {n}", FAIL if problems else OK,
                               "; ".join(problems) if problems else detail))
    return out


_INVARIANCE_ORBITS = (1, 20, 22, 44, 88)


def _roundtrip_row(n: int) -> CheckResult:
    rec = atlas_mod.get_atlas().orbit_record(n)
    num, triple = nilpotent.classify_nilpotent(rec.normal_form)
    triple.validate()
    if num != n:
        return CheckResult(f"orbit {n} round trip", FAIL, f"classified as {num}")
    return CheckResult(f"orbit {n} round trip", OK,
                       f"marks {atlas_mod.marks_to_string(rec.marks)}")


def _invariance_row(args) -> CheckResult:
    n, seed, k = args
    rec = atlas_mod.get_atlas().orbit_record(n)
    rng = random.Random((seed, n, k))
    u = random_unimodular(rng)
    moved = wedge4_transform(u, rec.normal_form)
    num, triple = nilpotent.classify_nilpotent(moved)
    triple.validate()
    sdim = nilpotent.stabilizer_dim(moved)
    if num != n or sdim != 63 - rec.dim:
        return CheckResult(f"orbit {n} conjugate {k}", FAIL,
                           f"classified {num}, stabilizer {sdim}")
    return CheckResult(f"orbit {n} conjugate {k}", OK, "class and stabilizer stable")


def _map_jobs(fn: Callable, items: Sequence, jobs: int) -> List:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(it) for it in items]


def suite_nnforms(seed: int = 42, jobs: int = 1) -> List[CheckResult]:
    out = nilpotent.verify_nilpotent_tables()
    out.append(_orbit22_reference_check())
    out += _map_jobs(_roundtrip_row, sorted(atlas_mod.get_atlas().orbits), jobs)
    out += _map_jobs(_invariance_row,
                     [(n, seed, k) for n in _INVARIANCE_ORBITS for k in range(5)],
                     jobs)
    return out


def _orbit22_reference_check() -> CheckResult:
    """The printed solution for orbit 22 satisfies the bracket system verbatim."""
    rec = atlas_mod.get_atlas().orbit_record(22)
    h = nilpotent.characteristic_to_h(rec.marks)
    e = rec.normal_form
    f = FourVector.from_terms([(-8, (3, 4, 5, 7)), (5, (2, 5, 6, 7)),
                               (9, (2, 4, 6, 8)), (5, (1, 5, 6, 8)),
                               (-8, (1, 3, 7, 8))])
    ok = (bracket01(h, f) == f.scale(-2) and bracket11(e, f) == h)
    return CheckResult("orbit 22 reference solution", OK if ok else FAIL,
                       "[e,f] = h and [h,f] = -2f verbatim")


def _family_suite_one(args) -> List[CheckResult]:
    k, seed = args
    spec = families.build_family(k)
    out = families.check_subalgebra(spec)
    d0, d1 = families.EXPECTED_DIMS[k]
    ok = spec.dims == (d0, d1)
    out.append(CheckResult(f"family {k} expected dims", OK if ok else FAIL,
                           f"{spec.dims} vs ({d0}, {d1})"))
    out.append(families.verify_commuting_p(k, spec))
    out += families.verify_family_table(k, seed=seed, spec=spec)
    return out


def suite_families(seed: int = 42, jobs: int = 1) -> List[CheckResult]:
    nested = _map_jobs(_family_suite_one,
                       [(k, seed) for k in families.FAMILY_NUMBERS], jobs)
    out = [r for chunk in nested for r in chunk]
    out += families.verify_family_intersections()
    return out


def suite_hasse(seed: int = 42, jobs: int = 1) -> List[CheckResult]:
    atl = atlas_mod.get_atlas()
    out = atl.verify_hasse()
    out += atl.palindromic_report()
    ok = atl.reversal_partner(93) == 94
    out.append(CheckResult("reversal partner of 93", OK if ok else FAIL,
                           f"{atl.reversal_partner(93)}"))
    return out


SUITE_FUNCTIONS = {
    "structure": suite_structure,
    "table1": suite_table1,
    "table2": suite_table2,
    "nnforms": suite_nnforms,
    "families": suite_families,
    "hasse": suite_hasse,
}


def run_suite(name: str, seed: int = 42, jobs: int = 1) -> List[CheckResult]:
    if name == "all":
        out = []
        for key in ("structure", "table1", "table2", "nnforms", "families", "hasse"):
            out += [CheckResult(f"[{key}] {r.name}", r.status, r.detail)
                    for r in SUITE_FUNCTIONS[key](seed=seed, jobs=jobs)]
        return out
    if name not in SUITE_FUNCTIONS:
        raise ValueError(f"unknown suite {name!r}")
    return SUITE_FUNCTIONS[name](seed=seed, jobs=jobs)
