"""Coupon colorings of cubic graphs.

Thin wrapper over the _couponkit extension module: graph generators, the
exact 2-coupon-coloring solver, {1,2}-factor machinery and the constructive
coloring engine.
"""

try:
    from ._couponkit import *  # noqa: F401,F403  (installed layout)
    from ._couponkit import __doc__ as _ext_doc
except ImportError:  # build-tree layout: extension next to the package dir
    from _couponkit import *  # noqa: F401,F403
    from _couponkit import __doc__ as _ext_doc

__all__ = [
    "Graph",
    "parse_graph",
    "format_graph",
    "parse_coloring",
    "format_coloring",
    "validate_cubic",
    "is_bipartite",
    "odd_cycle",
    "is_connected",
    "girth",
    "find_cycle",
    "contains_induced_cycle",
    "verify_coupon",
    "tds_pair_from_coloring",
    "coloring_from_tds_pair",
    "heawood",
    "counterexample60",
    "remark_graph",
    "double_cover",
    "named",
    "random_cubic",
    "one_two_factor",
    "decide",
    "enumerate_min_bad",
    "color_cubic_with_c4",
]
