"""Induced topological minors, structural recognizers, and clique-width
certificates for small graphs."""

from .graph import (
    Graph,
    BlockDecomposition,
    blocks,
    canonical_form,
    complement,
    connected_components,
    contract_edges,
    disjoint_union,
    find_isomorphism,
    induced_subgraph,
    is_isomorphic,
    line_graph,
    max_degree,
    subdivide,
)
from .generators import (
    all_graphs,
    all_subdivisions,
    complete,
    complete_multipartite,
    cycle,
    grid,
    named,
    path,
    random_block_cactus,
    random_cograph,
    random_graph,
    wall,
)
from .containment import (
    SubdivisionModel,
    contains_induced,
    contains_itm,
    contains_itm_oracle,
    contract_model,
    verify_model,
)
from .recognizers import (
    is_block_cactus,
    is_cograph,
    is_complete_multipartite,
    is_cycle_graph,
    is_forbidden_free,
    is_subcubic_triangle_free,
    is_tree,
    recognize_paw_itm_free,
)
from .cliquewidth import (
    Create,
    Join,
    KExpression,
    LabeledGraph,
    Relabel,
    SearchBudgetExceeded,
    Union,
    build_bounded_expr,
    build_cograph_expr,
    build_cycle_expr,
    compose_blocks,
    eval_expression,
    exact_cw,
    format_term,
    parse_term,
    width,
)
from .classifier import Verdict, classify, classify_all, verify_witness

__version__ = "0.1.0"
