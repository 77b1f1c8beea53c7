"""Exact tools for the orientable burning number of small graphs."""

from .bounds import (
    ObnBracket,
    bracket,
    caro_wei_lower,
    lower_bound_alpha,
    odn_bruteforce,
    perfect_bracket,
    upper_bound_clique_cover,
    upper_bound_matching,
)
from .burning import (
    BnResult,
    BurningSchedule,
    burning_decision,
    burning_number,
    king,
    schedule_from_clique_cover,
    verify_schedule,
)
from .errors import BudgetExceeded, Graph6Error, ObnError, PreconditionError
from .graph import (
    DistanceMatrix,
    Graph,
    Orientation,
    ball,
    complement,
    connected_components,
    induced_subgraph,
    orientation_from_bits,
    out_distances,
)
from .io import parse_edge_list, parse_graph6, write_graph6
from .solver import ObnResult, ke_obn, ke_schedule, obn_decision, obn_exact, p4_fires, solve

__version__ = "0.1.0"
