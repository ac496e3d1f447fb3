"""Immutable simple-graph representation over int bitmasks.

Vertices are 0..n-1. Each adjacency row is a Python int whose bit v encodes
membership of v in the open neighborhood. The complement is a derived view
(flip bits, mask the diagonal) and is never stored as a second copy.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from .errors import GraphBuildError


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bit positions of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with bit-vector adjacency rows.

    Immutable after construction; safe to share across threads.
    """

    __slots__ = ("n", "m", "adj", "full_mask")

    def __init__(self, n: int, adj: tuple):
        self.n = n
        self.adj = adj
        self.full_mask = (1 << n) - 1
        self.m = sum(row.bit_count() for row in adj) // 2

    # -- neighborhoods -----------------------------------------------------

    def neighbors(self, v: int) -> int:
        """Open neighborhood N(v) as a bitmask."""
        self._check_vertex(v)
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        self._check_vertex(v)
        return self.adj[v] | (1 << v)

    def complement_neighbors(self, v: int) -> int:
        """Non-neighbors of v, excluding v itself (the complement's N(v))."""
        self._check_vertex(v)
        return self.full_mask & ~self.adj[v] & ~(1 << v)

    def closed_complement_neighbors(self, v: int) -> int:
        """The complement's closed neighborhood of v."""
        return self.complement_neighbors(v) | (1 << v)

    def degree(self, v: int) -> int:
        return self.neighbors(v).bit_count()

    def max_degree(self) -> int:
        return max(row.bit_count() for row in self.adj)

    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        return bool(self.adj[u] >> v & 1)

    def edges(self):
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def complement(self) -> "Graph":
        """Materialize the complement graph (tests and explicit use only)."""
        rows = tuple(
            self.full_mask & ~row & ~(1 << v) for v, row in enumerate(self.adj)
        )
        return Graph(self.n, rows)

    # -- connectivity / metrics --------------------------------------------

    def is_connected(self, in_complement: bool = False) -> bool:
        if self.n == 0:
            return True
        row = self.complement_neighbors if in_complement else self.neighbors
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= row(v)
            frontier = nxt & ~seen
            seen |= nxt
        return seen == self.full_mask

    def eccentricity(self, v: int) -> Optional[int]:
        """Max BFS distance from v, or None if some vertex is unreachable."""
        self._check_vertex(v)
        seen = 1 << v
        frontier = seen
        dist = 0
        while True:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
            dist += 1
        if seen != self.full_mask:
            return None
        return dist

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise GraphBuildError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other):
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges: Iterable) -> Graph:
    """Build a Graph from unordered vertex pairs.

    Duplicate pairs collapse; self-loops and out-of-range endpoints are
    rejected with the offending pair.
    """
    if n < 0:
        raise GraphBuildError(f"negative vertex count {n}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise GraphBuildError(f"self-loop ({u},{v}) not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphBuildError(f"edge ({u},{v}) has endpoint out of range for n={n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


class VertexSet:
    """Ordered vertex subset: insertion order plus a membership bitmask."""

    __slots__ = ("n", "order", "members")

    def __init__(self, n: int, vertices: Iterable[int] = ()):
        self.n = n
        self.order: list = []
        self.members = 0
        for v in vertices:
            self.add(v)

    def add(self, v: int):
        if not 0 <= v < self.n:
            raise GraphBuildError(f"vertex {v} out of range for n={self.n}")
        if not self.members >> v & 1:
            self.order.append(v)
            self.members |= 1 << v

    def copy(self) -> "VertexSet":
        return VertexSet(self.n, self.order)

    def without(self, v: int) -> "VertexSet":
        return VertexSet(self.n, (u for u in self.order if u != v))

    def __contains__(self, v: int) -> bool:
        return bool(self.members >> v & 1)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self) -> Iterator[int]:
        return iter(self.order)

    def __eq__(self, other):
        if isinstance(other, VertexSet):
            return self.n == other.n and self.order == other.order
        return NotImplemented

    def __repr__(self):
        return f"VertexSet({self.order})"


@dataclass(frozen=True)
class GraphMetrics:
    """Radius, diameter, support count and degree extremes of a graph.

    radius/diameter are None when the graph is disconnected.
    """

    radius: Optional[int]
    diameter: Optional[int]
    support_count: int
    max_degree: int
    min_degree: int
    connected: bool
    complement_connected: bool


def metrics(g: Graph) -> GraphMetrics:
    """Compute GraphMetrics by all-pairs BFS plus degree scans."""
    eccs = [g.eccentricity(v) for v in range(g.n)]
    connected = all(e is not None for e in eccs) and g.n > 0
    radius = min(eccs) if connected else None
    diameter = max(eccs) if connected else None
    leaves = 0
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            leaves |= g.adj[v]
    return GraphMetrics(
        radius=radius,
        diameter=diameter,
        support_count=leaves.bit_count(),
        max_degree=g.max_degree(),
        min_degree=g.min_degree(),
        connected=connected,
        complement_connected=g.is_connected(in_complement=True),
    )


def is_dominating(g: Graph, d: VertexSet, in_complement: bool = False) -> bool:
    """True iff every vertex outside d has a neighbor in d (in G or in Ḡ)."""
    covered = 0
    for v in d:
        covered |= g.complement_neighbors(v) if in_complement else g.adj[v]
    return g.full_mask & ~d.members & ~covered == 0


def is_global_dominating(g: Graph, d: VertexSet) -> bool:
    """True iff d dominates both G and its complement. Empty sets never qualify."""
    if len(d) == 0:
        return False
    return is_dominating(g, d) and is_dominating(g, d, in_complement=True)


def private_neighbors(
    g: Graph, v: int, s: VertexSet, in_complement: bool = False
) -> VertexSet:
    """pn(v, S): all u whose only S-neighbor is v, by the open-neighborhood rule.

    Fellow S-members can qualify; the purification pass applies its own
    feasibility-preserving check on top of this literal definition.
    """
    if v not in s:
        raise InvalidPrivateQuery(f"vertex {v} not in S")
    out = VertexSet(g.n)
    for u in range(g.n):
        nbrs = g.complement_neighbors(u) if in_complement else g.adj[u]
        if nbrs & s.members == 1 << v:
            out.add(u)
    return out


class InvalidPrivateQuery(ValueError):
    pass
