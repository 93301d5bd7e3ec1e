"""Exact skew zero forcing number, propagation time, and throttling search.

The search enumerates initial sets by size k ascending and, within a size,
by lexicographic order of the sorted id vector. The first optimum found in
that order is the canonical witness, so results are deterministic and
schedule independent. Pruning is sound: on a graph with an edge every
initial set other than V(G) needs at least one round, so sizes k >= best
are skipped outright and a propagation is abandoned once k plus the rounds
spent so far reaches the current best (a completion that merely ties the
best is still allowed to finish, which is what makes the canonical witness
reachable when the best value came from a seed rather than enumeration).
"""

from dataclasses import dataclass
from itertools import combinations

from .forcing import _propagate_mask, _propagate_mask_bounded
from .graph import Graph

__all__ = [
    "ThrottleResult",
    "skew_zero_forcing_number",
    "min_propagation_time",
    "throttling_at_k",
    "throttle",
    "throttle_with_bound",
]


@dataclass(frozen=True)
class ThrottleResult:
    """Optimal throttling data with a canonical witness.

    per_k maps k to the optimal |S| + pt over sets of size k for every k
    at which the global optimum is attained; sizes whose best value
    exceeds the optimum are not certified by the pruned search and are
    omitted, so the table is identical whether or not an upper bound was
    supplied.
    """

    th: int
    witness: frozenset[int]
    k: int
    pt: int
    per_k: dict[int, int]
    z_minus: int
    pt_minimum: int

    def to_json_dict(self) -> dict:
        return {
            "th": self.th,
            "k": self.k,
            "pt": self.pt,
            "witness": sorted(self.witness),
            "per_k": {str(k): v for k, v in sorted(self.per_k.items())},
            "z_minus": self.z_minus,
            "pt_minimum": self.pt_minimum,
        }


def _mask_of(comb):
    m = 0
    for v in comb:
        m |= 1 << v
    return m


def skew_zero_forcing_number(g: Graph) -> int:
    """Least k such that some size-k set forces the whole graph; may be 0."""
    bits = g.bit_adjacency
    full = (1 << g.n) - 1
    for k in range(g.n + 1):
        for comb in combinations(range(g.n), k):
            pt, _ = _propagate_mask(bits, full, _mask_of(comb))
            if pt is not None:
                return k
    raise AssertionError("the full vertex set always forces")


def min_propagation_time(g: Graph) -> int:
    """Minimum propagation time over minimum skew forcing sets."""
    z = skew_zero_forcing_number(g)
    bits = g.bit_adjacency
    full = (1 << g.n) - 1
    best = None
    for comb in combinations(range(g.n), z):
        pt, _ = _propagate_mask(bits, full, _mask_of(comb))
        if pt is not None and (best is None or pt < best):
            best = pt
    return best


def throttling_at_k(g: Graph, k: int) -> int | None:
    """Optimal |S| + pt over skew forcing sets of size exactly k.

    Returns None when no size-k forcing set exists.
    """
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    bits = g.bit_adjacency
    full = (1 << g.n) - 1
    best = None
    for comb in combinations(range(g.n), k):
        if best is None:
            pt, _ = _propagate_mask(bits, full, _mask_of(comb))
        else:
            pt = _propagate_mask_bounded(bits, full, _mask_of(comb), best - k)
        if pt is not None and (best is None or k + pt < best):
            best = k + pt
    return best


def _greedy_seed(g: Graph):
    """A cheap valid throttling value and witness used to seed pruning.

    Greedily grows a set, each time adding the vertex that minimizes the
    number of white vertices left at stall; falls back to V(G) minus the
    endpoints of the first edge when that beats the greedy value.
    """
    bits = g.bit_adjacency
    n = g.n
    full = (1 << n) - 1
    chosen: set[int] = set()
    mask = 0
    pt, final = _propagate_mask(bits, full, mask)
    while pt is None:
        best_v = -1
        best_left = None
        for v in range(n):
            if mask & (1 << v):
                continue
            cand_pt, cand_final = _propagate_mask(bits, full, mask | (1 << v))
            left = 0 if cand_pt is not None else (full ^ cand_final).bit_count()
            if best_left is None or left < best_left:
                best_left = left
                best_v = v
        chosen.add(best_v)
        mask |= 1 << best_v
        pt, final = _propagate_mask(bits, full, mask)
    value = len(chosen) + pt
    witness = frozenset(chosen)
    for u in range(n):
        if g.adj[u]:
            v = min(g.adj[u])
            if n - 1 < value:
                value = n - 1
                witness = frozenset(range(n)) - {u, v}
            break
    return value, witness


def _edgeless_result(g: Graph) -> ThrottleResult:
    n = g.n
    everything = frozenset(range(n))
    return ThrottleResult(
        th=n, witness=everything, k=n, pt=0,
        per_k={n: n}, z_minus=n, pt_minimum=0,
    )


def _search(g: Graph, upper: int | None) -> ThrottleResult:
    n = g.n
    if g.num_edges() == 0:
        if upper is not None and upper < n:
            raise ValueError(f"bound {upper} is below the optimum {n}")
        return _edgeless_result(g)

    bits = g.bit_adjacency
    full = (1 << n) - 1
    best, _seed_witness = _greedy_seed(g)
    if upper is not None and upper < best:
        best = upper
    witness = None
    observed: dict[int, int] = {}

    k = 0
    while k < best and k <= n:
        budget = best - k
        for comb in combinations(range(n), k):
            pt = _propagate_mask_bounded(bits, full, _mask_of(comb), budget)
            if pt is None:
                continue
            th = k + pt
            if k not in observed or th < observed[k]:
                observed[k] = th
            if th < best or (th == best and witness is None):
                best = th
                witness = frozenset(comb)
                budget = best - k
        k += 1

    if witness is None:
        raise ValueError(f"no skew forcing set found with |S| + pt <= {best}; "
                         "the supplied bound is below the optimum")

    per_k = {k: v for k, v in observed.items() if v <= best}
    kw = len(witness)
    z = skew_zero_forcing_number(g)
    ptm = None
    for comb in combinations(range(n), z):
        pt, _ = _propagate_mask(bits, full, _mask_of(comb))
        if pt is not None and (ptm is None or pt < ptm):
            ptm = pt
    return ThrottleResult(
        th=best, witness=witness, k=kw, pt=best - kw,
        per_k=per_k, z_minus=z, pt_minimum=ptm,
    )


def throttle(g: Graph) -> ThrottleResult:
    """Globally optimal skew throttling with the canonical witness."""
    return _search(g, None)


def throttle_with_bound(g: Graph, upper: int) -> ThrottleResult:
    """Same result as throttle(g), accelerated by an admissible upper bound.

    The caller guarantees upper >= th(g); a bound below the optimum leaves
    nothing to find and raises ValueError.
    """
    if upper < 0:
        raise ValueError("bound must be nonnegative")
    return _search(g, upper)
