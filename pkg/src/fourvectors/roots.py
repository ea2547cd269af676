"""Root systems of g with respect to both Cartan subalgebras.

Two coordinate systems are used.  Roots w.r.t. the diagonal subalgebra d
are pair roots eps_i - eps_j and quad roots eps_i+eps_j+eps_k+eps_l,
carried as Z^8 representatives modulo the all-ones vector.  Roots w.r.t.
the Cartan subspace c in g1 are integer vectors in the orthogonal basis
p_1..p_7 (gamma combinations with the arbitrary constant fixed to 1).
"""

from __future__ import annotations

import itertools
import random
import re
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import report
from .algebra import FourVector, Operator, perm_sign
from .atlas import get_atlas
from .report import CheckResult, FAIL, OK, WARN


@dataclass(frozen=True)
class Root:
    """Root of g w.r.t. d: kind 'pair' with (i, j) or 'quad' with a 4-set."""

    kind: str
    indices: Tuple[int, ...]

    def vector(self) -> Tuple[int, ...]:
        v = [0] * 8
        if self.kind == "pair":
            i, j = self.indices
            v[i - 1], v[j - 1] = 1, -1
        else:
            for i in self.indices:
                v[i - 1] = 1
        return tuple(v)

    def centered(self) -> Tuple[int, ...]:
        """8v - sum(v): a genuine linear representative (inner = dot/64)."""
        v = self.vector()
        s = sum(v)
        return tuple(8 * x - s for x in v)

    def __str__(self) -> str:
        if self.kind == "pair":
            return "e%d-e%d" % self.indices
        return "e" + "+e".join(map(str, self.indices))


def pair_root(i: int, j: int) -> Root:
    if i == j or not (1 <= i <= 8 and 1 <= j <= 8):
        raise ValueError("pair root needs two distinct indices in 1..8")
    return Root("pair", (i, j))


def quad_root(indices: Iterable[int]) -> Root:
    s = tuple(sorted(indices))
    if len(s) != 4 or len(set(s)) != 4 or not all(1 <= i <= 8 for i in s):
        raise ValueError("quad root needs four distinct indices in 1..8")
    return Root("quad", s)


def roots_of_g() -> List[Root]:
    """All 126 roots w.r.t. d: 56 pair + 70 quad."""
    roots = [pair_root(i, j) for i in range(1, 9) for j in range(1, 9) if i != j]
    roots += [Root("quad", s) for s in itertools.combinations(range(1, 9), 4)]
    return roots


def root_value(r: Root, a: Operator) -> Q:
    if not a.is_diagonal():
        raise ValueError("root_value needs a diagonal operator")
    d = a.diagonal_entries()
    if r.kind == "pair":
        i, j = r.indices
        return d[i - 1] - d[j - 1]
    return sum((d[i - 1] for i in r.indices), Q(0))


def root_inner(r1: Root, r2: Root) -> int:
    """(u, v) = u.v - (sum u)(sum v)/8; equals d-2 on quad pairs, norm 2."""
    u, v = r1.vector(), r2.vector()
    dot = sum(a * b for a, b in zip(u, v))
    num = 8 * dot - sum(u) * sum(v)
    if num % 8:
        raise AssertionError("inner product is not an integer")
    return num // 8


# ---------------------------------------------------------------------------
# the Cartan subspace in g1

PERMUTATIONS_S: Tuple[Tuple[int, ...], ...] = (
    (1, 2, 3, 4, 5, 6, 7, 8),
    (1, 3, 5, 7, 6, 8, 2, 4),
    (1, 5, 6, 2, 8, 4, 3, 7),
    (1, 6, 8, 3, 4, 7, 5, 2),
    (1, 8, 4, 5, 7, 2, 6, 3),
    (1, 4, 7, 6, 2, 3, 8, 5),
    (1, 7, 2, 8, 3, 5, 4, 6),
)


def p_of_permutation(s: Sequence[int]) -> FourVector:
    """p(s) = e_{s1}^e_{s2}^e_{s3}^e_{s4} + e_{s5}^e_{s6}^e_{s7}^e_{s8}."""
    if sorted(s) != list(range(1, 9)):
        raise ValueError("argument must be a permutation of 1..8")
    return FourVector.from_terms([(1, tuple(s[:4])), (1, tuple(s[4:]))])


def is_transversal(s1: Sequence[int], s2: Sequence[int]) -> bool:
    """First quadruples share exactly two indices."""
    for s in (s1, s2):
        if sorted(s) != list(range(1, 9)):
            raise ValueError("argument must be a permutation of 1..8")
    return len(set(s1[:4]) & set(s2[:4])) == 2


def cartan_subspace() -> List[FourVector]:
    """The seven commuting semisimple four-vectors p_1..p_7."""
    return [p_of_permutation(s) for s in PERMUTATIONS_S]


_GAMMA_SIGNS = (
    (1, 1, 1, 1, 1, 1, 1),
    (1, -1, 1, -1, -1, -1, 1),
    (1, 1, -1, 1, -1, -1, -1),
    (1, -1, -1, -1, 1, 1, -1),
    (-1, 1, 1, -1, 1, -1, -1),
    (-1, -1, 1, 1, -1, 1, -1),
    (-1, 1, -1, -1, -1, 1, 1),
    (-1, -1, -1, 1, 1, -1, 1),
)

CartanVector = Tuple[Q, ...]


def gamma_basis() -> List[CartanVector]:
    """The eight gamma vectors in p-coordinates, with the constant c = 1."""
    return [tuple(Q(x) for x in signs) for signs in _GAMMA_SIGNS]


@dataclass(frozen=True)
class CRoot:
    """Root w.r.t. c: gamma_i - gamma_j or a sum of four gammas."""

    kind: str
    indices: Tuple[int, ...]
    coords: Tuple[int, ...]  # in the p_1..p_7 basis

    def __str__(self) -> str:
        if self.kind == "pair":
            return "g%d-g%d" % self.indices
        return "g" + "+g".join(map(str, self.indices))


def roots_wrt_c() -> List[CRoot]:
    """All 126 roots as vectors in the p-basis."""
    out = []
    for i in range(1, 9):
        for j in range(1, 9):
            if i != j:
                coords = tuple(a - b for a, b in
                               zip(_GAMMA_SIGNS[i - 1], _GAMMA_SIGNS[j - 1]))
                out.append(CRoot("pair", (i, j), coords))
    for s in itertools.combinations(range(1, 9), 4):
        coords = tuple(sum(_GAMMA_SIGNS[i - 1][k] for i in s) for k in range(7))
        out.append(CRoot("quad", s, coords))
    return out


def croot_inner(r1: CRoot, r2: CRoot) -> int:
    num = sum(a * b for a, b in zip(r1.coords, r2.coords))
    if num % 8:
        raise AssertionError("inner product is not an integer")
    return num // 8


def croot_value(r: CRoot, p: Sequence) -> Q:
    """Value of the root on p in c (p given by its p-basis coordinates)."""
    return sum((Q(a) * Q(b) for a, b in zip(r.coords, p)), Q(0))


def vanishing_subsystem(p: Sequence) -> List[CRoot]:
    """Roots w.r.t. c vanishing on the element with p-coordinates `p`."""
    return [r for r in roots_wrt_c() if croot_value(r, p) == 0]


# ---------------------------------------------------------------------------
# ADE classification of subsystems

_LETTER_ORDER = {"E": 0, "D": 1, "A": 2}

_ROOT_COUNT = {"A": lambda n: n * (n + 1), "D": lambda n: 2 * n * (n - 1),
               "E": lambda n: {6: 72, 7: 126, 8: 240}[n]}


@dataclass(frozen=True)
class DiagramType:
    """Multiset of irreducible simply-laced types, e.g. D5+A1, 2A2, 4A1."""

    components: Tuple[Tuple[str, int], ...]

    @classmethod
    def of(cls, comps: Iterable[Tuple[str, int]]) -> "DiagramType":
        key = lambda c: (_LETTER_ORDER[c[0]], -c[1])
        return cls(tuple(sorted(comps, key=key)))

    @classmethod
    def from_string(cls, text: str) -> "DiagramType":
        text = text.replace(" ", "")
        if not text:
            return cls(())
        comps = []
        for token in text.split("+"):
            m = re.fullmatch(r"(\d*)([ADE])(\d+)", token)
            if not m:
                raise ValueError(f"cannot parse type token {token!r}")
            mult = int(m.group(1)) if m.group(1) else 1
            comps += [(m.group(2), int(m.group(3)))] * mult
        return cls.of(comps)

    @property
    def rank(self) -> int:
        return sum(r for _l, r in self.components)

    def root_count(self) -> int:
        return sum(_ROOT_COUNT[l](r) for l, r in self.components)

    def __str__(self) -> str:
        if not self.components:
            return "(empty)"
        groups = []
        for comp, runs in itertools.groupby(self.components):
            k = len(list(runs))
            label = "%s%d" % comp
            groups.append(label if k == 1 else f"{k}{label}")
        return "+".join(groups)


def _component_type(nodes: List[int], edges: Dict[int, List[int]]) -> Tuple[str, int]:
    n = len(nodes)
    degs = {v: len(edges[v]) for v in nodes}
    branch = [v for v in nodes if degs[v] >= 3]
    if any(degs[v] > 3 for v in nodes) or len(branch) > 1:
        raise ValueError("diagram is not of type ADE")
    if not branch:
        return ("A", n)
    b = branch[0]
    arms = []
    for start in edges[b]:
        length, prev, cur = 1, b, start
        while True:
            nxt = [w for w in edges[cur] if w != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                raise ValueError("diagram is not of type ADE")
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return ("D", n)
    if arms == [1, 2, 2]:
        return ("E", 6)
    if arms == [1, 2, 3]:
        return ("E", 7)
    if arms == [1, 2, 4]:
        return ("E", 8)
    raise ValueError("diagram is not of type ADE")


def classify_vectors(vectors: List[Tuple[int, ...]], inner_den: int) -> DiagramType:
    """Type of a root subsystem given by integer vectors with inner = dot/den.

    The input must be closed under negation, consist of norm-2 roots, and
    be an honest subsystem; the total root count is cross-checked against
    the recognized type.
    """
    if not vectors:
        return DiagramType(())
    vecset = {tuple(v) for v in vectors}
    if len(vecset) != len(vectors):
        raise ValueError("duplicate roots in subsystem")
    for v in vecset:
        if tuple(-x for x in v) not in vecset:
            raise ValueError("subsystem is not closed under negation")
        if sum(x * x for x in v) != 2 * inner_den:
            raise ValueError("root has wrong norm")
    positives = [v for v in vecset
                 if next(x for x in v if x) > 0]
    posset = set(positives)
    simple = []
    for a in positives:
        if not any(tuple(x - y for x, y in zip(a, b)) in posset for b in posset):
            simple.append(a)
    edges: Dict[int, List[int]] = {i: [] for i in range(len(simple))}
    for i in range(len(simple)):
        for j in range(i + 1, len(simple)):
            dot = sum(x * y for x, y in zip(simple[i], simple[j]))
            if dot % inner_den:
                raise ValueError("non-integral Cartan pairing")
            c = dot // inner_den
            if c == -1:
                edges[i].append(j)
                edges[j].append(i)
            elif c != 0:
                raise ValueError("simple system is not simply laced")
    comps = []
    unseen = set(range(len(simple)))
    while unseen:
        start = unseen.pop()
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for w in edges[v]:
                if w in unseen:
                    unseen.discard(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(_component_type(comp, edges))
    result = DiagramType.of(comps)
    if result.root_count() != len(vecset):
        raise ValueError(
            f"root count {len(vecset)} does not match type {result}")
    return result


def classify_subsystem(croots: List[CRoot]) -> DiagramType:
    return classify_vectors([r.coords for r in croots], 8)


def classify_d_roots(roots: List[Root]) -> DiagramType:
    return classify_vectors([r.centered() for r in roots], 64)


def simple_system_of_g() -> List[Root]:
    """The 7 simple roots of the full system extracted by lexicographic positivity."""
    roots = roots_of_g()
    cent = {r.centered(): r for r in roots}
    positives = [v for v in cent if next(x for x in v if x) > 0]
    posset = set(positives)
    simple = [v for v in positives
              if not any(tuple(x - y for x, y in zip(v, b)) in posset
                         for b in posset)]
    return [cent[v] for v in simple]


# ---------------------------------------------------------------------------
# verification of the semisimple-family table

_P_TERM = re.compile(r"([+-]?\d*)P\((\d+)\)")


def parse_p_notation(text: str) -> List[Tuple[int, ...]]:
    """Basis vectors from strings like "P(1), P(13)-P(7), P(23)+2P(4)".

    P(k1...kn) stands for p_{k1} + ... + p_{kn}; returns 7-coordinate
    integer vectors in the p-basis.
    """
    vectors = []
    for chunk in text.split(","):
        chunk = chunk.strip().replace(" ", "")
        if not chunk:
            continue
        coords = [0] * 7
        pos = 0
        for m in _P_TERM.finditer(chunk):
            if m.start() != pos:
                raise ValueError(f"cannot parse {chunk!r}")
            pos = m.end()
            coef_s = m.group(1)
            coef = int(coef_s) if coef_s not in ("", "+", "-") else (-1 if coef_s == "-" else 1)
            for ch in m.group(2):
                k = int(ch)
                if not 1 <= k <= 7:
                    raise ValueError(f"p-index out of range in {chunk!r}")
                coords[k - 1] += coef
        if pos != len(chunk):
            raise ValueError(f"cannot parse {chunk!r}")
        vectors.append(tuple(coords))
    return vectors


def generic_vanishing(basis: List[Tuple[int, ...]], rng: random.Random,
                      draws: int = 5) -> List[CRoot]:
    """Vanishing subsystem at a generic point of the span of `basis`.

    Draws several random integer combinations and keeps the smallest
    vanishing set, so accidental degeneracies are discarded.
    """
    if not basis:
        return roots_wrt_c()
    best: Optional[List[CRoot]] = None
    for _ in range(draws):
        coeffs = [rng.randint(1, 97) for _ in basis]
        p = [sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(7)]
        vanish = vanishing_subsystem(p)
        if best is None or len(vanish) < len(best):
            best = vanish
    return best


def verify_table1(seed: int = 42) -> List[CheckResult]:
    """Re-derive each family's centralizer type from a generic point.

    Row 27 is stored with a repeated basis entry (its span is only
    3-dimensional); it is flagged as an anomaly, not silently corrected.
    Row 29 carries a suspicious printed |Gamma_p| = 1140 and gets a note.
    """
    atlas = get_atlas()
    out = []
    for k in sorted(atlas.families):
        fam = atlas.families[k]
        rng = random.Random((seed, k))
        basis = parse_p_notation(fam.basis_text)
        duplicated = len(basis) != len(set(basis))
        if duplicated:
            basis = list(dict.fromkeys(basis))
        expected = DiagramType.from_string(fam.type_label)
        try:
            got = classify_subsystem(generic_vanishing(basis, rng))
            err = ""
        except ValueError as exc:
            got, err = None, str(exc)
        name = f"row {k}"
        if got == expected:
            detail = f"expected {expected}, got {got}"
            status = OK
        else:
            detail = f"expected {expected}, got {got if got is not None else err}"
            status = FAIL
        if duplicated:
            status = WARN
            detail += ("; basis printed with a repeated entry, deduplicated to a "
                       f"{len(basis)}-dimensional span (anomaly, not corrected)")
        if k == 29:
            detail += "; printed |Gamma_p| = 1140 looks misprinted (stored verbatim)"
        out.append(CheckResult(name, status, detail))
    return out
