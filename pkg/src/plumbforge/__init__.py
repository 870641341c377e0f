"""plumbforge: invariants of surface-singularity links and their fillings.

Lattice side: plumbing graphs, canonical and fundamental cycles, geometric
genus bounds, and the envelope of invariants a Milnor filling can carry.
Monodromy side: Dehn-twist words on marked surfaces, relator substitutions
with a signature ledger, and the induced Lefschetz-fibration invariants.
"""

from .envelope import (
    Envelope,
    FillingInvariants,
    Verdict,
    classify_filling,
    envelope,
    milnor_invariants,
)
from .errors import DomainError
from .fibration import (
    FibrationReport,
    fibration_euler,
    fibration_h1,
    fibration_signature,
    fibration_split,
    full_report,
)
from .genus import PgBound, best_pg_bound, path_bound, step_bound
from .graph import PlumbingGraph, chain_graph, cycle_graph, single_vertex, star_graph
from .lattice import (
    LinkHomology,
    canonical_cycle,
    floor_cycle,
    fundamental_cycle,
    good_vertices,
    intersection_matrix,
    is_minimally_elliptic,
    is_negative_definite,
    is_rational,
    link_homology,
    riemann_roch_chi,
)
from .openbook import (
    OpenBook,
    family_min_elliptic,
    family_triangle,
    family_xgbm,
    gay_mark_openbook,
    min_elliptic_family_graph,
    triangle_family_graph,
)
from .sandwich import is_sandwiched
from .surfaces import (
    Letter,
    MarkedSurface,
    TwistWord,
    hurwitz_move,
    ledger_signature,
    substitute,
    transvection,
    word_action,
)

__version__ = "0.1.0"
