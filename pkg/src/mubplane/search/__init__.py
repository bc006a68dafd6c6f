"""Numerical search for mutually unbiased bases."""
from mubplane.search.config import SearchConfig
from mubplane.search.cost import cost_and_gradient, cost_gradient, mub_cost
from mubplane.search.optimizer import SearchResult, optimize, search_ladder, search_max_mubs
from mubplane.search.parameters import BasisParameters

__all__ = [
    "BasisParameters",
    "SearchConfig",
    "SearchResult",
    "cost_and_gradient",
    "cost_gradient",
    "mub_cost",
    "optimize",
    "search_ladder",
    "search_max_mubs",
]
