"""Constructive heuristics for global dominating sets.

All three algorithms grow a set D while tracking the partition
A (undominated in G), B (undominated in the complement), C (globally
dominated). Tie-breaking is deterministic: primary score first, then the
stated secondary criterion, then lowest vertex id.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .errors import DisconnectedError, GraphBuildError, InvariantError
from .graph import Graph, VertexSet, is_global_dominating


class DominationState:
    """The evolving (D, A, B, C) partition plus an iteration counter.

    Coverage masks are maintained incrementally so that adding a vertex
    is O(n / wordsize).
    """

    __slots__ = ("g", "d", "covered_g", "covered_c", "h")

    def __init__(self, g: Graph, seed=()):
        self.g = g
        self.d = VertexSet(g.n)
        self.covered_g = 0
        self.covered_c = 0
        self.h = 0
        for v in seed:
            self.add(v)

    def add(self, v: int):
        if v in self.d:
            raise GraphBuildError(f"vertex {v} already chosen")
        self.d.add(v)
        self.covered_g |= self.g.adj[v]
        self.covered_c |= self.g.complement_neighbors(v)

    @property
    def a(self) -> int:
        """Vertices outside D with no neighbor in D."""
        return self.g.full_mask & ~self.d.members & ~self.covered_g

    @property
    def b(self) -> int:
        """Vertices outside D with no complement-neighbor in D."""
        return self.g.full_mask & ~self.d.members & ~self.covered_c

    @property
    def c(self) -> int:
        """Globally dominated vertices outside D."""
        return self.g.full_mask & ~self.d.members & self.covered_g & self.covered_c

    def done(self) -> bool:
        return self.a == 0 and self.b == 0

    def check_partition(self):
        """Assert the disjoint A/B/C/D cover of V (valid once D is nonempty)."""
        a, b, c, d = self.a, self.b, self.c, self.d.members
        if a & b or a & c or b & c or (a | b | c) & d:
            raise InvariantError("A, B, C, D are not pairwise disjoint")
        if a | b | c | d != self.g.full_mask:
            raise InvariantError("A, B, C, D do not cover V")


@dataclass
class HeuristicTrace:
    """Per-iteration record of vertices added and their selection score."""

    picks: List[Tuple[int, Tuple[int, ...], int]] = field(default_factory=list)
    halted_at: int = 0


def gad(state: DominationState, v: int) -> int:
    """Global active degree: |(N(v) ∩ A) ∪ (non-N(v) ∩ B) ∪ {v}|."""
    if v in state.d:
        raise GraphBuildError(f"vertex {v} is already in D")
    g = state.g
    return (
        (g.adj[v] & state.a) | (g.complement_neighbors(v) & state.b) | (1 << v)
    ).bit_count()


def gad_pair(state: DominationState, v: int, u: int) -> int:
    """Joint active degree of a pair, both self-members included."""
    if v == u:
        raise GraphBuildError("pair vertices must differ")
    g = state.g
    a, b = state.a, state.b
    cover = (
        (g.adj[v] & a)
        | (g.adj[u] & a)
        | (g.complement_neighbors(v) & b)
        | (g.complement_neighbors(u) & b)
        | (1 << v)
        | (1 << u)
    )
    return cover.bit_count()


def best_initial_pair(g: Graph) -> Tuple[int, int]:
    """Lexicographically smallest pair maximizing |N[u] Δ N[v]|."""
    if g.n < 2:
        raise GraphBuildError("need at least two vertices")
    best = (-1, (0, 1))
    for u in range(g.n):
        cu = g.closed_neighbors(u)
        for v in range(u + 1, g.n):
            score = (cu ^ g.closed_neighbors(v)).bit_count()
            if score > best[0]:
                best = (score, (u, v))
    return best[1]


def _require_coconnected(g: Graph):
    if not (g.is_connected() and g.is_connected(in_complement=True)):
        raise DisconnectedError("heuristics require G and its complement connected")


def _undominated_g(state: DominationState) -> int:
    return state.a


def _undominated_c(state: DominationState) -> int:
    return state.b


def _coverage_g(state: DominationState, v: int) -> int:
    """Closed-neighborhood coverage of the yet-undominated vertices of G.

    The candidate itself counts only while still undominated; otherwise
    covered vertices would tie with picks that dominate something new.
    """
    return (state.g.closed_neighbors(v) & state.a).bit_count()


def _coverage_c(state: DominationState, v: int) -> int:
    """Same for the complement side."""
    return (state.g.closed_complement_neighbors(v) & state.b).bit_count()


def _argmax(candidates, key):
    """First vertex (lowest id) among candidates maximizing key tuple."""
    best_v = None
    best_k = None
    for v in candidates:
        k = key(v)
        if best_k is None or k > best_k:
            best_v, best_k = v, k
    return best_v, best_k


def _h1_core(g: Graph, state: DominationState, trace: HeuristicTrace):
    """Shared iterative step of H1 and its modified variant."""
    from .graph import bits

    budget = state.a.bit_count() + state.b.bit_count()
    iterations = 0
    while not state.done():
        state.h += 1
        iterations += 1
        outside = g.full_mask & ~state.d.members
        v, score = _argmax(bits(outside), lambda v: (gad(state, v), -v))
        state.add(v)
        state.check_partition()
        trace.picks.append((state.h, (v,), score[0]))
    trace.halted_at = state.h
    if iterations > budget:
        raise InvariantError("H1 exceeded its |A0|+|B0| iteration budget")


def h1(g: Graph) -> Tuple[VertexSet, HeuristicTrace]:
    """Greedy max-GAD heuristic seeded with the best initial pair."""
    _require_coconnected(g)
    u, v = best_initial_pair(g)
    state = DominationState(g, (u, v))
    state.check_partition()
    trace = HeuristicTrace(picks=[(0, (u, v), gad_score_of_pair(g, u, v))])
    _h1_core(g, state, trace)
    return state.d, trace


def h1_modified(g: Graph) -> Tuple[VertexSet, HeuristicTrace]:
    """H1 without the initial-pair iteration: start from the empty set."""
    _require_coconnected(g)
    state = DominationState(g)
    trace = HeuristicTrace()
    _h1_core(g, state, trace)
    return state.d, trace


def gad_score_of_pair(g: Graph, u: int, v: int) -> int:
    return (g.closed_neighbors(u) ^ g.closed_neighbors(v)).bit_count()


def h2(g: Graph) -> Tuple[VertexSet, HeuristicTrace]:
    """Two-picks-per-iteration greedy: max new G-coverage, then max new
    complement coverage, until the set globally dominates."""
    from .graph import bits

    _require_coconnected(g)
    state = DominationState(g)
    trace = HeuristicTrace()
    while state.d.members | state.c != g.full_mask or len(state.d) == 0:
        state.h += 1
        added = []
        score = 0
        if state.a:
            outside = g.full_mask & ~state.d.members
            v, k = _argmax(
                bits(outside),
                lambda v: (_coverage_g(state, v), _coverage_c(state, v), -v),
            )
            state.add(v)
            added.append(v)
            score = k[0]
        if state.b:
            outside = g.full_mask & ~state.d.members
            u, k = _argmax(
                bits(outside),
                lambda v: (_coverage_c(state, v), _coverage_g(state, v), -v),
            )
            state.add(u)
            added.append(u)
            score = max(score, k[0])
        trace.picks.append((state.h, tuple(added), score))
    trace.halted_at = state.h
    return state.d, trace


def _h3_core(g: Graph, state: DominationState, trace: HeuristicTrace):
    from .graph import bits

    while not state.done():
        state.h += 1
        outside = g.full_mask & ~state.d.members
        v_h, k = _argmax(bits(outside), lambda v: (gad(state, v), -v))
        gad_v = k[0]
        v_prime = u_h = None
        if state.a:
            v_prime, _ = _argmax(
                bits(outside), lambda v: (_coverage_g(state, v), -v)
            )
        if state.b:
            u_h, _ = _argmax(bits(outside), lambda v: (_coverage_c(state, v), -v))
        pair = [x for x in (v_prime, u_h) if x is not None]
        if len(pair) == 2 and pair[0] == pair[1]:
            pair = pair[:1]
        if len(pair) == 2:
            pair_score = gad_pair(state, pair[0], pair[1])
        else:
            pair_score = gad(state, pair[0])
        if 2 * gad_v >= pair_score:
            state.add(v_h)
            trace.picks.append((state.h, (v_h,), gad_v))
        else:
            for x in pair:
                state.add(x)
            trace.picks.append((state.h, tuple(pair), pair_score))
        state.check_partition()
    trace.halted_at = state.h


def h3(g: Graph) -> Tuple[VertexSet, HeuristicTrace]:
    """H1/H2 hybrid: add the max-GAD vertex unless a coverage pair more
    than doubles it."""
    _require_coconnected(g)
    u, v = best_initial_pair(g)
    state = DominationState(g, (u, v))
    state.check_partition()
    trace = HeuristicTrace(picks=[(0, (u, v), gad_score_of_pair(g, u, v))])
    _h3_core(g, state, trace)
    return state.d, trace


def h3_modified(g: Graph) -> Tuple[VertexSet, HeuristicTrace]:
    """H3 without the initial-pair iteration."""
    _require_coconnected(g)
    state = DominationState(g)
    trace = HeuristicTrace()
    _h3_core(g, state, trace)
    return state.d, trace


HEURISTICS = {
    "h1": h1,
    "h2": h2,
    "h3": h3,
    "h1m": h1_modified,
    "h3m": h3_modified,
}


def run_heuristic(name: str, g: Graph) -> Tuple[VertexSet, HeuristicTrace]:
    try:
        fn = HEURISTICS[name]
    except KeyError:
        raise ValueError(f"unknown heuristic {name!r}") from None
    d, trace = fn(g)
    if not is_global_dominating(g, d):
        raise InvariantError(f"{name} produced an infeasible set")
    return d, trace
