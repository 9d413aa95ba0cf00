"""Exact maximum cut for co-bipartite chain graphs.

The pipeline: recognize a raw graph, contract its twins into a canonical
ChainForm, run the row-by-row dynamic program for the exact optimum with a
witnessing cut, or use the closed form when the instance is a twin-free
skeleton.  Brute-force oracles provide independent ground truth at small
scale.
"""

from .dp import DpTable, Solution, build_table, calculate_opt, max_cut_size, solve
from .forms import (
    ChainForm,
    CutAssignment,
    InvalidCutError,
    all_cuts,
    check_cut,
    cut_size,
    edge_count,
)
from .formats import (
    ParseError,
    format_chain_form,
    format_edge_list,
    parse_chain_form,
    parse_edge_list,
    read_chain_form,
    read_edge_list,
    write_chain_form,
    write_edge_list,
)
from .generators import (
    GenSpec,
    SplitMix64,
    block_structure_counterexample,
    counterexample_block_cut,
    counterexample_optimal_cut,
    random_chain_form,
    random_chain_forms,
    shuffle_expand,
)
from .graphs import (
    SIDE_K,
    SIDE_K_PRIME,
    STAGE_CHAIN,
    STAGE_COMPLEMENT,
    CliqueBipartition,
    Normalized,
    Rejection,
    SimpleGraph,
    VertexMap,
    expand,
    graph_from_edges,
    normalize,
    recognize,
    subset_cut_size,
)
from .oracle import (
    BudgetExceededError,
    OracleResult,
    brute_force_multiplicity,
    brute_force_subsets,
)
from .twinfree import (
    ROW_TYPES,
    BlockPattern,
    RowCut,
    apex_gain,
    block_objective,
    canonical_form,
    closed_form_optimum,
    mirror_form,
    mirror_permutation,
    pattern_cut_size,
    pattern_row_cut,
    pattern_search,
    pattern_to_cut,
    rev_rotate,
    rotate,
    skeleton,
    swap,
)

__version__ = "0.1.0"
