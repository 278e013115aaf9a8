"""Exact Betti tables of divisors on smooth rational normal surface scrolls."""
from .combinatorics import binom, ceil_div
from .decomposition import (
    Decomposition,
    Summand,
    betti_e_h2f_via_curve,
    betti_e_h_plus_eps_f,
    decompose,
    evaluate_residual_formula,
    evaluate_split_formula,
    h_plus_2f_formula,
)
from .errors import (
    Degenerate,
    InvalidInput,
    NotSmoothScroll,
    OutOfProblemScope,
    OutsideKnownFormulas,
    ScrollBettiError,
    UnsupportedCase,
)
from .module_e import ModuleESpec, betti_e, betti_rnc_module, betti_scroll_surface, regularity_e
from .oracle import (
    HilbertFunction,
    hf_ideal_of_x,
    hf_module_e,
    k_polynomial_check,
    koszul_oracle_betti_e,
)
from .scroll import (
    DivisorInvariants,
    Route,
    RouteVerdict,
    ScrollDivisor,
    decomposition_route,
    invariants,
    minimal_section_splits,
    regularity_drops,
    validate,
)
from .table import BettiTable, parse_json, render, table_add, table_scale, table_shift

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "Decomposition", "Degenerate", "DivisorInvariants", "HilbertFunction",
    "InvalidInput", "ModuleESpec", "NotSmoothScroll", "OutOfProblemScope",
    "OutsideKnownFormulas", "Route", "RouteVerdict", "ScrollBettiError", "ScrollDivisor",
    "Summand", "UnsupportedCase", "betti_e", "betti_e_h2f_via_curve", "betti_e_h_plus_eps_f",
    "betti_rnc_module", "betti_scroll_surface", "binom", "ceil_div", "decompose",
    "decomposition_route", "evaluate_residual_formula", "evaluate_split_formula",
    "h_plus_2f_formula", "hf_ideal_of_x", "hf_module_e", "invariants", "k_polynomial_check",
    "koszul_oracle_betti_e", "minimal_section_splits", "parse_json", "regularity_drops",
    "regularity_e", "render", "table_add", "table_scale", "table_shift", "validate",
]
