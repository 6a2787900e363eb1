"""Approximation algorithms for minimum-power edge multi-cover."""

from .bipartite import BipartiteInstance, from_bipartite, to_bipartite
from .coverage import coverage_value, solve_bpbmem
from .edge_cover import min_cost_edge_cover
from .formats import ParseError, emit_instance, parse_instance
from .generate import gen_random
from .instance import (
    Instance,
    InvalidInstanceError,
    Solution,
    deficiency_potential,
    power_profile,
    residual_requirements,
    threshold_costs,
    trivial_cover,
    validate_instance,
)
from .khalf import solve_khalf
from .logk import logk_run, solve_logk
from .matching import max_weight_matching
from .oracle import exact_bpbmem, exact_mpemc, exact_restricted
from .restricted import RestrictedInstance, solve_restricted
from .verify import verify

__version__ = "0.1.0"
