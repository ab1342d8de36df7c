from ._dhlrw import (
    BranchWidthTooLarge,
    BudgetExceeded,
    Error,
    Graph,
    InvalidArgument,
    NotDistanceHereditary,
    ParseError,
    cut_rank,
    decompose,
    format_graph,
    gen_random_dh,
    is_distance_hereditary,
    layout,
    layout_width,
    lrw,
    lrw_exact,
    matroid_pathwidth,
    matroid_pathwidth_exact,
    parse_graph,
    recompose,
)

__all__ = [
    "BranchWidthTooLarge",
    "BudgetExceeded",
    "Error",
    "Graph",
    "InvalidArgument",
    "NotDistanceHereditary",
    "ParseError",
    "cut_rank",
    "decompose",
    "format_graph",
    "gen_random_dh",
    "is_distance_hereditary",
    "layout",
    "layout_width",
    "lrw",
    "lrw_exact",
    "matroid_pathwidth",
    "matroid_pathwidth_exact",
    "parse_graph",
    "recompose",
]
