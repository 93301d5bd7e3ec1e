"""Skew zero forcing: simultaneous-round propagation with auditable traces.

The color-change rule: any vertex, blue or white, with exactly one white
neighbor colors that neighbor blue. A round applies every force that is
eligible against the start-of-round coloring, all at once. The fact that
a white vertex may force is what separates this rule from standard zero
forcing (and is why rK2 colors itself from an empty initial set).
"""

from dataclasses import dataclass

from .graph import Graph, ball, leaves

__all__ = [
    "OUTCOME_COMPLETED",
    "OUTCOME_STALLED",
    "Coloring",
    "ForceEvent",
    "PropagationTrace",
    "eligible_forces",
    "step",
    "propagate",
    "is_skew_forcing_set",
    "verify_ball_cover",
]

OUTCOME_COMPLETED = "completed"
OUTCOME_STALLED = "stalled"


@dataclass(frozen=True)
class Coloring:
    """The set of currently blue vertices; everything else is white."""

    blue: frozenset[int] = frozenset()

    @classmethod
    def of(cls, vertices) -> "Coloring":
        return cls(frozenset(vertices))


@dataclass(frozen=True)
class ForceEvent:
    """A single force: `forcer` colored `forced` during round `round`."""

    forcer: int
    forced: int
    round: int


@dataclass(frozen=True)
class PropagationTrace:
    """Full record of one propagation run.

    `rounds[t]` holds every force event of round t+1, including multiple
    forcers of the same target; the target is colored once. `pt` is the
    number of productive rounds when the run completed, and None when it
    stalled (a stalled run has no meaningful propagation time).
    """

    initial: Coloring
    rounds: tuple[tuple[ForceEvent, ...], ...]
    outcome: str
    final_blue: frozenset[int]

    @property
    def completed(self) -> bool:
        return self.outcome == OUTCOME_COMPLETED

    @property
    def pt(self) -> int | None:
        return len(self.rounds) if self.completed else None

    def events(self):
        for round_events in self.rounds:
            yield from round_events

    def to_lines(self) -> list[str]:
        """Line-delimited export: 'round forcer forced' per event, then a summary."""
        lines = [f"{e.round} {e.forcer} {e.forced}" for e in self.events()]
        if self.completed:
            lines.append(f"completed pt={self.pt}")
        else:
            lines.append(f"stalled blue={len(self.final_blue)}")
        return lines


def _check_subset(g, blue):
    for v in blue:
        if not 0 <= v < g.n:
            raise ValueError(f"blue vertex {v} out of range")


def eligible_forces(g: Graph, coloring: Coloring) -> frozenset[tuple[int, int]]:
    """All (forcer, forced) pairs eligible under the skew rule.

    A pair (u, w) qualifies when w is the unique neighbor of u outside the
    blue set. u itself may be white; a vertex with no white neighbor
    contributes nothing.
    """
    blue = coloring.blue
    _check_subset(g, blue)
    out = []
    for u in range(g.n):
        white_nbrs = g.adj[u] - blue
        if len(white_nbrs) == 1:
            (w,) = white_nbrs
            out.append((u, w))
    return frozenset(out)


def step(g: Graph, coloring: Coloring, round_no: int = 1):
    """Apply one simultaneous round from `coloring`.

    Returns the new coloring and the tuple of force events, sorted by
    (forcer, forced) for reproducibility. Eligibility is judged against
    the start-of-round coloring only.
    """
    pairs = sorted(eligible_forces(g, coloring))
    events = tuple(ForceEvent(u, w, round_no) for u, w in pairs)
    new_blue = coloring.blue | {w for _, w in pairs}
    return Coloring(new_blue), events


def propagate(g: Graph, initial) -> PropagationTrace:
    """Run rounds from the initial blue set until completion or stall."""
    blue = frozenset(initial)
    _check_subset(g, blue)
    start = Coloring(blue)
    rounds = []
    coloring = start
    while True:
        if len(coloring.blue) == g.n:
            return PropagationTrace(start, tuple(rounds), OUTCOME_COMPLETED, coloring.blue)
        coloring_next, events = step(g, coloring, round_no=len(rounds) + 1)
        if not events:
            return PropagationTrace(start, tuple(rounds), OUTCOME_STALLED, coloring.blue)
        rounds.append(events)
        coloring = coloring_next


def is_skew_forcing_set(g: Graph, initial) -> bool:
    """True iff propagation from `initial` colors every vertex."""
    blue = frozenset(initial)
    _check_subset(g, blue)
    mask = 0
    for v in blue:
        mask |= 1 << v
    pt, _ = _propagate_mask(g.bit_adjacency, (1 << g.n) - 1, mask)
    return pt is not None


def verify_ball_cover(g: Graph, initial, trace: PropagationTrace) -> bool:
    """Check that balls of radius 2*pt around leaves and initial vertices cover g.

    This is a theorem for every completed propagation, so a False return
    signals an engine bug rather than a property of the input.
    """
    if not trace.completed:
        raise ValueError("ball cover is only defined for completed traces")
    radius = 2 * trace.pt
    centers = set(leaves(g)) | set(initial)
    covered = set()
    for c in centers:
        covered |= ball(g, c, radius)
    return len(covered) == g.n


# Bitmask propagation, shared by the solver and the engine's fast paths.
# blue/white sets are integers with bit v for vertex v.

def _propagate_mask(bits, full, blue):
    """Run to completion or stall. Returns (pt or None, final blue mask)."""
    if blue == full:
        return 0, blue
    rounds = 0
    while True:
        white = full ^ blue
        forced = 0
        for a in bits:
            w = a & white
            if w and not (w & (w - 1)):
                forced |= w
        if not forced:
            return None, blue
        blue |= forced
        rounds += 1
        if blue == full:
            return rounds, blue


def _propagate_mask_bounded(bits, full, blue, max_rounds):
    """Like _propagate_mask but gives up after max_rounds productive rounds.

    Returns the propagation time when the run completes within the budget,
    else None (stalled or out of budget).
    """
    if blue == full:
        return 0
    rounds = 0
    while rounds < max_rounds:
        white = full ^ blue
        forced = 0
        for a in bits:
            w = a & white
            if w and not (w & (w - 1)):
                forced |= w
        if not forced:
            return None
        blue |= forced
        rounds += 1
        if blue == full:
            return rounds
    return None
