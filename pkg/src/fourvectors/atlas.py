"""Atlas of the embedded classification tables: lookups, consistency
checks, and JSON/DOT export.

The nilpotent data lives in two cross-linked sets: the 62-row class table
(types, stabilizer dimensions with the six corrected d values, reductive
parts) and the 94-row normal-form table (marks, normal form, orbit dim).
Orbit numbers missing from the class table are the omitted partners whose
characteristic is the reverse of the preceding row's.

Set E7_ATLAS_PATH to a JSON file (same schema as `export_json`) to load an
external atlas instead of the embedded one.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

from . import _tables, report
from .algebra import FourVector
from .report import CheckResult, FAIL, OK, WARN


def parse_marks(text: str) -> Tuple[int, ...]:
    """Accept "0102010" (all digits) or space-separated "4 4 4 4 4 4 8"."""
    text = text.strip()
    if " " in text:
        marks = tuple(int(p) for p in text.split())
    else:
        marks = tuple(int(c) for c in text)
    if any(m < 0 for m in marks):
        raise ValueError("marks must be non-negative")
    return marks


def marks_to_string(marks: Tuple[int, ...]) -> str:
    if all(m <= 9 for m in marks):
        return "".join(str(m) for m in marks)
    return " ".join(str(m) for m in marks)


class HasseEdge(NamedTuple):
    a: int  # orbit in the closure ...
    b: int  # ... of this orbit


@dataclass(frozen=True)
class OrbitRecord:
    number: int
    marks: Tuple[int, ...]
    normal_form: FourVector
    dim: int
    type_label: Optional[str] = None      # from the class table, when present
    d: Optional[int] = None               # corrected stabilizer dimension
    d_original: Optional[int] = None      # as originally printed
    d_corrected: bool = False
    s0_type: Optional[str] = None


@dataclass(frozen=True)
class FamilyRecord:
    number: int
    basis_text: str
    type_label: str
    w_order: int
    gamma_order: int


@dataclass(frozen=True)
class MixedRow:
    number: int
    marks: Tuple[int, ...]
    type_label: str


class Atlas:
    def __init__(self, table1, table2, nnforms, family_tables, hasse_edges):
        self.families: Dict[int, FamilyRecord] = {
            no: FamilyRecord(no, basis, typ, w, g)
            for no, basis, typ, w, g in table1}
        self._table2: Dict[int, tuple] = {row[0]: row for row in table2}
        self.orbits: Dict[int, OrbitRecord] = {}
        for no, marks_s, sets, dim in nnforms:
            marks = parse_marks(marks_s)
            nf = FourVector.from_terms([(1, s) for s in sets])
            t2 = self._table2.get(no)
            if t2 is not None:
                _, t2marks, typ, d_orig, d_corr, s0 = t2
                if parse_marks(t2marks) != marks:
                    raise ValueError(f"marks disagree between tables for orbit {no}")
                d = d_corr if d_corr is not None else d_orig
                if dim != 63 - d:
                    raise ValueError(f"dim/d mismatch for orbit {no}")
                rec = OrbitRecord(no, marks, nf, dim, typ, d, d_orig,
                                  d_corr is not None, s0)
            else:
                rec = OrbitRecord(no, marks, nf, dim, d=63 - dim)
            self.orbits[no] = rec
        self.mixed_tables: Dict[int, List[MixedRow]] = {
            k: [MixedRow(no, tuple(marks), typ) for no, marks, typ in rows]
            for k, rows in family_tables.items()}
        self.hasse: List[HasseEdge] = [HasseEdge(a, b) for a, b in hasse_edges]
        marks_seen: Dict[Tuple[int, ...], int] = {}
        for rec in self.orbits.values():
            if rec.marks in marks_seen:
                raise ValueError(f"duplicate characteristic {rec.marks}")
            marks_seen[rec.marks] = rec.number
        self._by_marks = marks_seen

    @classmethod
    def embedded(cls) -> "Atlas":
        return cls(_tables.TABLE1, _tables.TABLE2, _tables.NNFORMS,
                   _tables.FAMILY_TABLES, _tables.HASSE_EDGES)

    @classmethod
    def from_json(cls, path: str) -> "Atlas":
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        table1 = [(r["number"], r["basis"], r["type"], r["w_order"], r["gamma_order"])
                  for r in data["families"]]
        table2 = [(r["number"], r["marks"], r["type"], r["d_original"],
                   r.get("d_corrected"), r["s0_type"]) for r in data["classes"]]
        nnforms = [(r["number"], r["marks"],
                    tuple(tuple(s) for s in r["normal_form"]), r["dim"])
                   for r in data["orbits"]]
        family_tables = {int(k): [(r["number"], tuple(r["marks"]), r["type"])
                                  for r in rows]
                         for k, rows in data["mixed_tables"].items()}
        hasse = [tuple(e) for e in data["hasse_edges"]]
        return cls(table1, table2, nnforms, family_tables, hasse)

    # -- lookups ----------------------------------------------------------

    def orbit_record(self, n: int) -> OrbitRecord:
        if n not in self.orbits:
            raise ValueError(f"orbit number {n} out of range")
        return self.orbits[n]

    def orbit_by_marks(self, marks: Tuple[int, ...]) -> Optional[int]:
        return self._by_marks.get(tuple(marks))

    def family_record(self, k: int) -> FamilyRecord:
        if k not in self.families:
            raise ValueError(f"family number {k} out of range")
        return self.families[k]

    def mixed_table(self, k: int) -> List[MixedRow]:
        if k not in self.mixed_tables:
            raise ValueError(f"no mixed-family table for k={k}")
        return self.mixed_tables[k]

    def table2_numbers(self) -> List[int]:
        return sorted(self._table2)

    def hasse_edges(self) -> List[HasseEdge]:
        return list(self.hasse)

    # -- consistency checks -------------------------------------------------

    def reversal_partner(self, n: int) -> Optional[int]:
        """Orbit whose marks are the reverse of orbit n's (n itself if palindromic)."""
        rec = self.orbit_record(n)
        return self._by_marks.get(tuple(reversed(rec.marks)))

    def palindromic_report(self) -> List[CheckResult]:
        """Each characteristic is palindromic or reversed by a neighbouring row.

        The single legitimate exception is the pair (82, 85) sitting between
        rows 83 and 86 of the class table; any other non-adjacent reversal
        pair is an error.
        """
        out = []
        exceptions = []
        for n in sorted(self.orbits):
            rec = self.orbits[n]
            partner = self.reversal_partner(n)
            if partner is None:
                out.append(CheckResult(f"orbit {n}", FAIL, "no reversal partner"))
            elif partner == n:
                out.append(CheckResult(f"orbit {n}", OK, "palindromic"))
            elif abs(partner - n) == 1:
                out.append(CheckResult(f"orbit {n}", OK, f"partner {partner}"))
            else:
                exceptions.append((n, partner))
                status = WARN if {n, partner} == {82, 85} else FAIL
                out.append(CheckResult(
                    f"orbit {n}", status,
                    f"partner {partner} not adjacent (the gap between rows 83 and 86)"
                    if status == WARN else f"partner {partner} not adjacent"))
        pairs = {frozenset(p) for p in exceptions}
        if pairs == {frozenset((82, 85))}:
            out.append(CheckResult("exceptions", OK, "exactly the (82, 85) pair"))
        else:
            out.append(CheckResult("exceptions", FAIL, f"unexpected set {sorted(pairs)}"))
        return out

    def verify_hasse(self, edges: Optional[List[HasseEdge]] = None) -> List[CheckResult]:
        """Edge dims strictly increase and the set is its own transitive reduction."""
        if edges is None:
            edges = self.hasse
        out = []
        adj: Dict[int, List[int]] = {}
        for a, b in edges:
            adj.setdefault(a, []).append(b)
        for a, b in edges:
            if a not in self.orbits or b not in self.orbits:
                out.append(CheckResult(f"edge ({a},{b})", FAIL, "unknown orbit"))
                continue
            da, db = self.orbits[a].dim, self.orbits[b].dim
            if da >= db:
                out.append(CheckResult(f"edge ({a},{b})", FAIL, f"dim {da} !< {db}"))
                continue
            if self._reachable_avoiding_direct(adj, a, b):
                out.append(CheckResult(f"edge ({a},{b})", FAIL,
                                       "transitively redundant"))
            else:
                out.append(CheckResult(f"edge ({a},{b})", OK, f"{da} < {db}"))
        return out

    @staticmethod
    def _reachable_avoiding_direct(adj, a, b) -> bool:
        # is there a path a -> ... -> b of length >= 2?
        stack = [x for x in adj.get(a, ()) if x != b]
        seen = set(stack)
        while stack:
            x = stack.pop()
            for y in adj.get(x, ()):
                if y == b:
                    return True
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    # -- export -------------------------------------------------------------

    def export_json(self) -> str:
        data = {
            "families": [
                {"number": f.number, "basis": f.basis_text, "type": f.type_label,
                 "w_order": f.w_order, "gamma_order": f.gamma_order}
                for f in (self.families[k] for k in sorted(self.families))],
            "classes": [
                {"number": no, "marks": row[1], "type": row[2],
                 "d_original": row[3], "d_corrected": row[4], "s0_type": row[5]}
                for no, row in sorted(self._table2.items())],
            "orbits": [
                {"number": r.number, "marks": marks_to_string(r.marks),
                 "normal_form": [list(k) for _c, k in r.normal_form.terms()],
                 "dim": r.dim}
                for r in (self.orbits[n] for n in sorted(self.orbits))],
            "mixed_tables": {
                str(k): [{"number": r.number, "marks": list(r.marks),
                          "type": r.type_label} for r in rows]
                for k, rows in sorted(self.mixed_tables.items())},
            "hasse_edges": [list(e) for e in self.hasse],
        }
        return json.dumps(data, indent=1)

    def export_dot_hasse(self) -> str:
        lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
        by_dim: Dict[int, List[int]] = {}
        for n in sorted(self.orbits):
            by_dim.setdefault(self.orbits[n].dim, []).append(n)
        for dim in sorted(by_dim):
            row = " ".join(f"o{n};" for n in by_dim[dim])
            lines.append(f"  {{ rank=same; {row} }}  // dim {dim}")
        for n in sorted(self.orbits):
            rec = self.orbits[n]
            lines.append(f'  o{n} [label="{n}\\n{marks_to_string(rec.marks)}\\ndim {rec.dim}"];')
        for a, b in self.hasse:
            lines.append(f"  o{a} -> o{b};")
        lines.append("}")
        return "\n".join(lines)


_CACHE: Dict[str, Atlas] = {}


def get_atlas() -> Atlas:
    """The active atlas; E7_ATLAS_PATH overrides the embedded tables."""
    path = os.environ.get("E7_ATLAS_PATH", "")
    if path not in _CACHE:
        _CACHE[path] = Atlas.from_json(path) if path else Atlas.embedded()
    return _CACHE[path]
