"""Edge-cut width toolkit.

Computing the edge-cut width of a graph together with a witness spanning
tree, deriving tree decompositions of no larger width, and deciding five
NP-hard problems by dynamic programming over rooted spanning trees with
boundary records: Edge Disjoint Paths, List Coloring, Boolean CSP,
MaxSRTI and MinCCA.
"""

__version__ = "0.1.0"

from ._kernel import IMPL as kernel_impl
from .csp import CSPInstance, incidence_graph, oracle_csp, solve_csp
from .dp import ChildSplit, SolverContext, build_context, classify_children
from .ecw import BudgetError, EcwResult, ecw_enumerate_oracle, ecw_exact, ecw_heuristic
from .edp import EDPInstance, oracle_edp, solve_edp
from .graph import (
    BoundaryView,
    DisconnectedGraphError,
    Graph,
    GraphError,
    RootedSpanningTree,
    boundary,
    descendants,
    ecw_of_tree,
    feedback_edge_number,
    fundamental_cycle_path,
    local_feedback_edges,
    maximal_spanning_forest,
)
from .lcol import (
    ListColoringInstance,
    oracle_list_coloring,
    record_dominates,
    solve_list_coloring,
)
from .mincca import (
    Arborescence,
    MinCCAInstance,
    oracle_mincca,
    solve_mincca,
    total_changeover_cost,
)
from .srti import (
    SRTIInstance,
    acceptability_graph,
    decide_maxsrti,
    is_blocking,
    oracle_srti,
    solve_maxsrti,
)
from .treedecomp import (
    TreeDecomposition,
    tree_decomposition_from_ecw,
    validate_tree_decomposition,
)
