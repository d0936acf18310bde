"""Rainbow subrectangles in latin rectangles and bipartite anti-Ramsey numbers.

A proper edge-coloring of K_{m,n} is an m x n latin rectangle; a rainbow
K_{a,b} is an a x b subrectangle with pairwise distinct symbols.  The package
builds blockers (rectangles with no rainbow subrectangle of a given shape),
decides the arrow relation K_{m,n} ->_R K_{a,b} by exhaustive search, and
sweeps hosts to compute small vertex and edge anti-Ramsey numbers.
"""

from .algebra import (
    DifferenceSet,
    FiniteField,
    PrimePower,
    ProjectivePlane,
    extension_field,
    field_create,
    plane_from_blocker,
    plane_from_difference_set,
    singer_difference_set,
    verify_plane_axioms,
)
from .constructions import (
    block_blocker,
    cyclic_rectangle,
    extend_rows,
    kron_blocker,
    singer_blocker,
)
from .decide import ArrowDecision, SearchConfig, decide_arrow, verify_certificate
from .errors import AntiRamseyError, BudgetExhausted
from .latin import (
    LatinRectangle,
    RainbowQuery,
    SubrectangleWitness,
    canonical_relabel,
    find_rainbow,
    find_rainbow_either,
    greedy_rainbow,
    is_rainbow,
)
from .ramsey import AntiRamseyResult, ar_edge, ar_edge_formula, ar_vertex, ar_vertex_formula

__version__ = "0.1.0"

__all__ = [
    "AntiRamseyError",
    "AntiRamseyResult",
    "ArrowDecision",
    "BudgetExhausted",
    "DifferenceSet",
    "FiniteField",
    "LatinRectangle",
    "PrimePower",
    "ProjectivePlane",
    "RainbowQuery",
    "SearchConfig",
    "SubrectangleWitness",
    "ar_edge",
    "ar_edge_formula",
    "ar_vertex",
    "ar_vertex_formula",
    "block_blocker",
    "canonical_relabel",
    "cyclic_rectangle",
    "decide_arrow",
    "extend_rows",
    "extension_field",
    "field_create",
    "find_rainbow",
    "find_rainbow_either",
    "greedy_rainbow",
    "is_rainbow",
    "kron_blocker",
    "plane_from_blocker",
    "plane_from_difference_set",
    "singer_blocker",
    "singer_difference_set",
    "verify_certificate",
    "verify_plane_axioms",
]
