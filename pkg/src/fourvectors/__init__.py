"""Exact classification toolkit for SL(8)-orbits of four-vectors.

Constructs the Z2-graded Lie algebra g = sl(8) (+) wedge^4 C^8 of type E7
in exact rational arithmetic, computes sl2 triples and orbit invariants,
and re-verifies the embedded atlas: 32 semisimple families, 94 nilpotent
orbits with normal forms and corrected dimensions, 7 mixed-family
subalgebras, Carter diagrams, and the orbit-closure diagram.
"""

from .algebra import (FourVector, GradedElement, Operator, bracket, bracket00,
                      bracket01, bracket11, hodge_dual, is_nilpotent,
                      jordan_decompose, killing_form)
from .atlas import Atlas, get_atlas
from .nilpotent import (Characteristic, Sl2Triple, characteristic_to_h,
                        classify_nilpotent, complete_sl2, eigenspace,
                        h_to_characteristic, orbit_dim, solve_f, stabilizer_dim)
from .roots import DiagramType, cartan_subspace, classify_subsystem, roots_of_g

__version__ = "0.1.0"

__all__ = [
    "Atlas", "Characteristic", "DiagramType", "FourVector", "GradedElement",
    "Operator", "Sl2Triple", "bracket", "bracket00", "bracket01", "bracket11",
    "cartan_subspace", "characteristic_to_h", "classify_nilpotent",
    "classify_subsystem", "complete_sl2", "eigenspace", "get_atlas",
    "h_to_characteristic", "hodge_dual", "is_nilpotent", "jordan_decompose",
    "killing_form", "orbit_dim", "roots_of_g", "solve_f", "stabilizer_dim",
]
