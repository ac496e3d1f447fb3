"""Exact solvers: a brute-force cardinality-increasing oracle and the
binary-search implicit enumeration solver over priority-ordered subsets."""

import itertools
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional, Tuple

from .bounds import lower_bound
from .errors import DisconnectedError, GdomsetError, InfeasibleSetError
from .graph import Graph, VertexSet, is_global_dominating
from .heuristics import run_heuristic
from .purify import purify

BRUTE_FORCE_LIMIT = 24
BGDS_LIMIT = 64


@dataclass
class SolveResult:
    algorithm: str
    vertices: VertexSet
    cardinality: int
    feasible: bool
    iterations: int
    optimal: bool
    elapsed_s: float


@dataclass
class SearchState:
    """Progress of the binary search: certified-infeasible size, incumbent."""

    lo: int
    U: int
    nu: int = 0
    best: Optional[VertexSet] = None
    tested: int = 0


@dataclass(frozen=True)
class PriorityList:
    """Vertex permutation: seed vertices first, then by descending
    min(deg, codeg), ties by ascending id."""

    ranking: Tuple[int, ...]


def _require_coconnected(g: Graph):
    if not (g.is_connected() and g.is_connected(in_complement=True)):
        raise DisconnectedError("solver requires G and its complement connected")


def _closed_rows(g: Graph, in_complement: bool):
    if in_complement:
        return [g.closed_complement_neighbors(v) for v in range(g.n)]
    return [g.closed_neighbors(v) for v in range(g.n)]


def brute_force_gamma_g(g: Graph, cap: Optional[int] = None) -> SolveResult:
    """Smallest global dominating set by increasing-cardinality enumeration."""
    return _brute_force(g, cap, global_=True)


def brute_force_gamma(g: Graph, cap: Optional[int] = None) -> SolveResult:
    """Smallest ordinary dominating set of G, same enumeration scheme."""
    return _brute_force(g, cap, global_=False)


def _brute_force(g: Graph, cap: Optional[int], global_: bool) -> SolveResult:
    if g.n > BRUTE_FORCE_LIMIT:
        raise GdomsetError(
            f"brute force limited to n <= {BRUTE_FORCE_LIMIT} (got {g.n})"
        )
    if global_:
        _require_coconnected(g)
    start = time.perf_counter()
    cap = g.n if cap is None else min(cap, g.n)
    rows_g = _closed_rows(g, False)
    rows_c = _closed_rows(g, True) if global_ else None
    full = g.full_mask
    tested = 0
    for k in range(1, cap + 1):
        for comb in itertools.combinations(range(g.n), k):
            tested += 1
            cover = 0
            for v in comb:
                cover |= rows_g[v]
            if cover != full:
                continue
            if global_:
                cover_c = 0
                for v in comb:
                    cover_c |= rows_c[v]
                if cover_c != full:
                    continue
            d = VertexSet(g.n, comb)
            return SolveResult(
                algorithm="brute-global" if global_ else "brute",
                vertices=d,
                cardinality=k,
                feasible=True,
                iterations=tested,
                optimal=True,
                elapsed_s=time.perf_counter() - start,
            )
    raise InfeasibleSetError(f"no feasible set within cardinality cap {cap}")


def build_priority_list(g: Graph, seed: VertexSet) -> PriorityList:
    """Seed vertices first in insertion order, rest by descending
    degree-symmetric score, ties ascending."""
    rest = [v for v in range(g.n) if v not in seed]
    rest.sort(key=lambda v: (-min(g.degree(v), g.n - 1 - g.degree(v)), v))
    return PriorityList(ranking=tuple(seed.order) + tuple(rest))


def next_candidate(
    plist: PriorityList, nu: int
) -> Iterator[Tuple[int, ...]]:
    """Lexicographic nu-subsets over ranking positions; exhausts then stops."""
    if nu < 1:
        raise ValueError("cardinality must be positive")
    yield from itertools.combinations(plist.ranking, nu)


def bgds(
    g: Graph,
    seed: Optional[VertexSet] = None,
    size_limit: int = BGDS_LIMIT,
    deadline: Optional[float] = None,
) -> SolveResult:
    """Binary search over cardinality with exhaustive nu-subset testing.

    The search keeps `lo` = largest size certified to admit no feasible set,
    so the incumbent is provably optimal at termination. A deadline (absolute
    time.monotonic() value) aborts with TimeoutError.
    """
    _require_coconnected(g)
    if g.n > size_limit:
        raise GdomsetError(f"bgds limited to n <= {size_limit} (got {g.n})")
    start = time.perf_counter()
    if seed is None:
        best = None
        for name in ("h1", "h2", "h3"):
            d, _ = run_heuristic(name, g)
            d, _ = purify(g, d)
            if best is None or len(d) < len(best):
                best = d
    else:
        if not is_global_dominating(g, seed):
            raise InfeasibleSetError("bgds seed must be a global dominating set")
        best = seed
    L = lower_bound(g).L
    state = SearchState(lo=L - 1, U=len(best), best=best)
    rows_g = _closed_rows(g, False)
    rows_c = _closed_rows(g, True)
    full = g.full_mask
    plist = build_priority_list(g, state.best)
    iterations = 0
    while state.U - state.lo > 1:
        iterations += 1
        nu = (state.lo + 1 + 3 * state.U) // 4
        nu = min(max(nu, state.lo + 1), state.U - 1)
        state.nu = nu
        found = None
        for comb in next_candidate(plist, nu):
            state.tested += 1
            if deadline is not None and state.tested % 4096 == 0:
                if time.monotonic() > deadline:
                    raise TimeoutError("bgds deadline exceeded")
            cover = 0
            for v in comb:
                cover |= rows_g[v]
            if cover != full:
                continue
            cover = 0
            for v in comb:
                cover |= rows_c[v]
            if cover == full:
                found = comb
                break
        if found is None:
            state.lo = nu
        else:
            state.best = VertexSet(g.n, found)
            state.U = nu
            plist = build_priority_list(g, state.best)
    return SolveResult(
        algorithm="bgds",
        vertices=state.best,
        cardinality=state.U,
        feasible=True,
        iterations=iterations,
        optimal=True,
        elapsed_s=time.perf_counter() - start,
    )
