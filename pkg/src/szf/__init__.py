"""szf: skew zero forcing simulation, exact throttling, and classification.

The package computes the skew zero forcing number, propagation times, and
throttling numbers of finite simple graphs exactly, generates the graph
families those quantities are known for in closed form, and recognizes the
structural classes whose throttling value is pinned at 1, 2, n-1, or n.
"""

from .graph import (
    Graph, from_edge_list, disjoint_union, join, complement, corona,
    induced_subgraph, components, distance, diameter, leaves, min_degree, ball,
)
from .formats import from_graph6, to_graph6, parse_edge_list, format_edge_list
from .forcing import (
    OUTCOME_COMPLETED, OUTCOME_STALLED,
    Coloring, ForceEvent, PropagationTrace,
    eligible_forces, step, propagate, is_skew_forcing_set, verify_ball_cover,
)
from .throttling import (
    ThrottleResult, skew_zero_forcing_number, min_propagation_time,
    throttling_at_k, throttle, throttle_with_bound,
)
from .families import (
    path, cycle, complete, empty, star, matching, complete_multipartite,
    hypercube, spider, h_graph, friendship, corona_k1, corona_k2,
    GadgetFamilySpec, gadget_family, random_gadget_spec, paired_blue_witness,
    th_path_formula, th_cycle_formula, th_spider_formula, spider_f_bound,
    th_hypercube_formula, diameter_lower_bound, diameter_bound_holds,
    SplitMix64, family_graph,
)
from .structure import (
    CotreeLeaf, CotreeNode, build_cotree, cotree_graph,
    find_induced_p4, find_induced_2k2, recognize_h_graph, recognize_corona_k1,
    ExtremeClassification, classify_extremes,
)

__version__ = "0.1.0"
