"""Independence gap, vertex types and almost-well-covered recognition."""

from ._core import (
    Classification,
    Decision,
    Graph,
    IndependenceReport,
    OracleBudgetExceeded,
    OutOfContract,
    canonical_form,
    classify,
    components,
    encode_graph6,
    exhaustive,
    family,
    gap_class,
    girth,
    independence_report,
    is_well_covered_girth6,
    maximal_independent_sets,
    parse_graph6,
    random_girth_graph,
    recognize,
)

__all__ = [
    "Classification",
    "Decision",
    "Graph",
    "IndependenceReport",
    "OracleBudgetExceeded",
    "OutOfContract",
    "canonical_form",
    "classify",
    "components",
    "encode_graph6",
    "exhaustive",
    "family",
    "gap_class",
    "girth",
    "independence_report",
    "is_well_covered_girth6",
    "maximal_independent_sets",
    "parse_graph6",
    "random_girth_graph",
    "recognize",
]
