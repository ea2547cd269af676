"""Carter/Dynkin diagrams of normal forms: graphs on the supporting quad
roots with solid edges at inner product -1 and dashed edges at +1, plus
contraction of dashed (acute) pairs and DOT emission.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import FourVector
from .roots import Root, quad_root, root_inner

SOLID = "solid"
DASHED = "dashed"


@dataclass(frozen=True)
class Node:
    label: str
    vec: Tuple[int, ...]  # Z^8 representative (sums of quad indicators)


@dataclass(frozen=True)
class CarterDiagram:
    nodes: Tuple[Node, ...]
    gram: Tuple[Tuple[int, ...], ...]
    edges: Tuple[Tuple[int, int, str], ...]

    def edge_kinds(self) -> Dict[Tuple[int, int], str]:
        return {(i, j): kind for i, j, kind in self.edges}

    def dashed_pairs(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, j, kind in self.edges if kind == DASHED]


def _inner_vec(u: Sequence[int], v: Sequence[int]) -> int:
    num = 8 * sum(a * b for a, b in zip(u, v)) - sum(u) * sum(v)
    if num % 8:
        raise AssertionError("non-integral inner product")
    return num // 8


def support_roots(e: FourVector) -> List[Root]:
    """Quad roots of the monomials with nonzero coefficient, in index order."""
    return [quad_root(k) for k in sorted(e.coeffs)]


def _diagram_from_nodes(nodes: List[Node]) -> CarterDiagram:
    n = len(nodes)
    gram = [[_inner_vec(nodes[i].vec, nodes[j].vec) for j in range(n)]
            for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if gram[i][j] < 0:
                edges.append((i, j, SOLID))
            elif gram[i][j] > 0:
                edges.append((i, j, DASHED))
    return CarterDiagram(tuple(nodes), tuple(tuple(r) for r in gram), tuple(edges))


def build_diagram(e: FourVector) -> CarterDiagram:
    """Diagram on the support roots, in monomial (lexicographic) order."""
    roots = support_roots(e)
    if len({r.indices for r in roots}) != len(roots):
        raise ValueError("support roots must be pairwise distinct")
    nodes = [Node("".join(map(str, r.indices)), r.vector()) for r in roots]
    return _diagram_from_nodes(nodes)


def gram_matrix(e: FourVector) -> List[List[int]]:
    roots = support_roots(e)
    return [[root_inner(a, b) for b in roots] for a in roots]


def _merge_label(a: Node, b: Node) -> str:
    # unit quad roots sharing three indices print like "23(4+5)8"
    if len(a.label) == 4 and len(b.label) == 4:
        sa, sb = set(a.label), set(b.label)
        common = sa & sb
        if len(common) == 3:
            da, db = sorted(sa - common), sorted(sb - common)
            items = sorted(common | {da[0]}, key=int)
            return "".join(f"({da[0]}+{db[0]})" if ch == da[0] else ch
                           for ch in items)
    return f"{a.label}+{b.label}"


def contract(diagram: CarterDiagram, i: int, j: int) -> CarterDiagram:
    """Replace the dashed pair (i, j) by the sum of its roots."""
    kinds = diagram.edge_kinds()
    if kinds.get((min(i, j), max(i, j))) != DASHED:
        raise ValueError("only dashed pairs (inner product +1) contract")
    a, b = diagram.nodes[i], diagram.nodes[j]
    merged = Node(_merge_label(a, b), tuple(x + y for x, y in zip(a.vec, b.vec)))
    nodes = [n for k, n in enumerate(diagram.nodes) if k not in (i, j)]
    nodes.append(merged)
    return _diagram_from_nodes(nodes)


def contract_all_dashed(diagram: CarterDiagram) -> CarterDiagram:
    """Contract dashed pairs until none remain (recomputing after each step)."""
    while True:
        pairs = diagram.dashed_pairs()
        if not pairs:
            return diagram
        diagram = contract(diagram, *pairs[0])


def to_dot(diagram: CarterDiagram, labels: str = "indices") -> str:
    """DOT text; `labels` is "indices" or "letters"."""
    if labels not in ("indices", "letters"):
        raise ValueError("labels must be 'indices' or 'letters'")
    lines = ["graph carter {", "  node [shape=circle];"]
    for k, node in enumerate(diagram.nodes):
        text = node.label if labels == "indices" else chr(ord("a") + k)
        lines.append(f'  n{k} [label="{text}"];')
    for i, j, kind in diagram.edges:
        style = "" if kind == SOLID else " [style=dashed]"
        lines.append(f"  n{i} -- n{j}{style};")
    lines.append("}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# graph-shape helpers for tests and the verification suite

def solid_graph(diagram: CarterDiagram) -> List[Tuple[int, int]]:
    return [(i, j) for i, j, kind in diagram.edges if kind == SOLID]


def dynkin_edges(letter: str, rank: int) -> List[Tuple[int, int]]:
    """Edge list of the simply-laced Dynkin diagram on nodes 0..rank-1."""
    if letter == "A":
        return [(i, i + 1) for i in range(rank - 1)]
    if letter == "D":
        if rank < 4:
            raise ValueError("D needs rank >= 4")
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    if letter == "E":
        if rank not in (6, 7, 8):
            raise ValueError("E needs rank 6, 7 or 8")
        return [(i, i + 1) for i in range(rank - 2)] + [(2, rank - 1)]
    raise ValueError("letter must be A, D or E")


def graphs_isomorphic(n: int, edges1: Sequence[Tuple[int, int]],
                      edges2: Sequence[Tuple[int, int]]) -> bool:
    """Backtracking isomorphism test for graphs on n nodes (n <= 8 here)."""
    e1 = {frozenset(e) for e in edges1}
    e2 = {frozenset(e) for e in edges2}
    if len(e1) != len(e2):
        return False
    deg1 = [sum(1 for e in e1 if i in e) for i in range(n)]
    deg2 = [sum(1 for e in e2 if i in e) for i in range(n)]
    if sorted(deg1) != sorted(deg2):
        return False
    for perm in itertools.permutations(range(n)):
        if all(deg2[perm[i]] == deg1[i] for i in range(n)) and \
           all(frozenset((perm[a], perm[b])) in e2 for e in e1 for a, b in [tuple(e)]):
            return True
    return False


def gram_equal_up_to_permutation(g1: Sequence[Sequence[int]],
                                 g2: Sequence[Sequence[int]]) -> bool:
    """Simultaneous row/column permutation equality of symmetric matrices."""
    n = len(g1)
    if len(g2) != n:
        return False
    d1, d2 = sorted(g1[i][i] for i in range(n)), sorted(g2[i][i] for i in range(n))
    if d1 != d2:
        return False
    for perm in itertools.permutations(range(n)):
        if all(g1[i][j] == g2[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return True
    return False
