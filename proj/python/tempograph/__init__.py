"""Design, verify and sparsify temporally connected graphs."""

from ._core import (
    TemporalGraph,
    TimeEdge,
    Journey,
    ForemostResult,
    TreeDesign,
    HypercubeDesign,
    RemovalResult,
    XorFormula,
    GadgetGraph,
    NecessaryLabelsReport,
    LabelPartition,
    RouterReport,
    cost,
    is_slse,
    validate_journey,
    remove_label,
    foremost,
    foremost_oracle,
    reconstruct,
    is_temporally_connected,
    spanning_tree_labelling,
    star_optimal_labelling,
    tree_lower_bound_check,
    hypercube_design,
    hypercube_journey,
    k4_redundant,
    clique_slse_reduce,
    is_minimal,
    greedy_removal,
    removal_profit_exact,
    parse_formula,
    satisfied_count,
    build_gadget,
    assignment_to_labelling,
    labelling_to_assignment,
    verify_necessary_labels,
    partition_labels,
    uniform_random_labelling,
    gnp_instance,
    clique_router_sparsify,
    gnp_router_sparsify,
    parse_graph,
    format_graph,
    __version__,
)

__all__ = [
    "TemporalGraph",
    "TimeEdge",
    "Journey",
    "ForemostResult",
    "TreeDesign",
    "HypercubeDesign",
    "RemovalResult",
    "XorFormula",
    "GadgetGraph",
    "NecessaryLabelsReport",
    "LabelPartition",
    "RouterReport",
    "cost",
    "is_slse",
    "validate_journey",
    "remove_label",
    "foremost",
    "foremost_oracle",
    "reconstruct",
    "is_temporally_connected",
    "spanning_tree_labelling",
    "star_optimal_labelling",
    "tree_lower_bound_check",
    "hypercube_design",
    "hypercube_journey",
    "k4_redundant",
    "clique_slse_reduce",
    "is_minimal",
    "greedy_removal",
    "removal_profit_exact",
    "parse_formula",
    "satisfied_count",
    "build_gadget",
    "assignment_to_labelling",
    "labelling_to_assignment",
    "verify_necessary_labels",
    "partition_labels",
    "uniform_random_labelling",
    "gnp_instance",
    "clique_router_sparsify",
    "gnp_router_sparsify",
    "parse_graph",
    "format_graph",
    "__version__",
]
