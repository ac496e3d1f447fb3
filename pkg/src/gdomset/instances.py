"""Instance parsing/writing and the generators for the graph families used
by the solvers and the benchmark harness.

File formats are 1-indexed; the in-memory Graph is 0-indexed. The rooted
product follows the drawing convention: each base vertex stays a distinct
node joined to its copy's root by an edge.
"""

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import GenerationError, GraphBuildError, ParseError
from .graph import Graph, build_graph

RANDOM_RETRY_BUDGET = 200


@dataclass(frozen=True)
class InstanceMeta:
    name: str
    n: int
    m: int
    density: float
    source: str
    warnings: int = 0


def _density(n: int, m: int) -> float:
    return 2 * m / (n * (n - 1)) if n > 1 else 0.0


def _meta(name: str, g: Graph, source: str, warnings: int = 0) -> InstanceMeta:
    return InstanceMeta(
        name=name,
        n=g.n,
        m=g.m,
        density=_density(g.n, g.m),
        source=source,
        warnings=warnings,
    )


# -- parsers ---------------------------------------------------------------


def parse_edge_list(text: str, name: str = "<edgelist>") -> Tuple[Graph, InstanceMeta]:
    """Header "n m", then m lines "u v" (1-indexed). '#'/'%' start comments."""
    header: Optional[Tuple[int, int]] = None
    pairs: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#")[0].split("%")[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise ParseError(f"expected two integers, got {raw!r}", lineno)
        a, b = int(parts[0]), int(parts[1])
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("negative header values", lineno)
            header = (a, b)
            continue
        n = header[0]
        if not (1 <= a <= n and 1 <= b <= n):
            raise ParseError(f"endpoint out of range 1..{n}: {raw!r}", lineno)
        pairs.append((a - 1, b - 1))
    if header is None:
        raise ParseError("missing 'n m' header line")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header declares m={m} but found {len(pairs)} edge lines")
    g = build_graph(n, pairs)
    dupes = len(pairs) - g.m
    return g, _meta(name, g, f"edgelist:{name}", warnings=dupes)


def parse_dimacs(text: str, name: str = "<dimacs>") -> Tuple[Graph, InstanceMeta]:
    """DIMACS format: "p edge n m" header and "e u v" lines (1-indexed)."""
    header: Optional[Tuple[int, int]] = None
    pairs: List[Tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if header is not None:
                raise ParseError("duplicate p-line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(f"malformed p-line {raw!r}", lineno)
            header = (int(parts[2]), int(parts[3]))
        elif parts[0] == "e":
            if header is None:
                raise ParseError("edge line before p-line", lineno)
            if len(parts) != 3:
                raise ParseError(f"malformed edge line {raw!r}", lineno)
            a, b = int(parts[1]), int(parts[2])
            n = header[0]
            if not (1 <= a <= n and 1 <= b <= n):
                raise ParseError(f"endpoint out of range 1..{n}: {raw!r}", lineno)
            pairs.append((a - 1, b - 1))
        else:
            raise ParseError(f"unrecognized line {raw!r}", lineno)
    if header is None:
        raise ParseError("missing 'p edge n m' header")
    n, m = header
    if len(pairs) != m:
        raise ParseError(f"header declares m={m} but found {len(pairs)} edge lines")
    g = build_graph(n, pairs)
    dupes = len(pairs) - g.m
    return g, _meta(name, g, f"dimacs:{name}", warnings=dupes)


def parse_auto(text: str, name: str = "<auto>") -> Tuple[Graph, InstanceMeta]:
    """Detect the format by header shape."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith(("c", "p")):
            return parse_dimacs(text, name)
        return parse_edge_list(text, name)
    raise ParseError("empty instance file")


def write_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list: "n m" header plus 1-indexed edge lines."""
    lines = [f"{g.n} {g.m}"]
    for u, v in g.edges():
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


# -- generators ------------------------------------------------------------


def gen_random(n: int, density: float, seed: int) -> Tuple[Graph, InstanceMeta]:
    """Uniform graph with exactly floor(density * n(n-1)/2) edges, resampled
    until both G and its complement are connected."""
    if n < 4:
        raise GraphBuildError("random generator needs n >= 4")
    if not 0.0 < density < 1.0:
        raise GraphBuildError("density must lie strictly between 0 and 1")
    m = int(density * n * (n - 1) / 2)
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng = random.Random(seed)
    for _ in range(RANDOM_RETRY_BUDGET):
        g = build_graph(n, rng.sample(all_pairs, m))
        if g.is_connected() and g.is_connected(in_complement=True):
            meta = _meta(
                f"random-n{n}-d{density}-s{seed}", g, f"random:{n}:{density}:{seed}"
            )
            return g, meta
    raise GenerationError(
        f"no co-connected draw with n={n}, density={density} within "
        f"{RANDOM_RETRY_BUDGET} retries"
    )


def gen_petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i <-> i+5."""
    edges = []
    for i in range(5):
        edges.append((i, (i + 1) % 5))
        edges.append((5 + i, 5 + (i + 2) % 5))
        edges.append((i, 5 + i))
    return build_graph(10, edges)


def gen_rooted_product(
    base: Graph, copies: Sequence[Tuple[Graph, int]]
) -> Tuple[Graph, Tuple[int, ...]]:
    """Attach copy i to base vertex i by an edge to the copy's root.

    Returns the product graph and the global ids of the roots. Base
    vertices keep ids 0..base.n-1; copies are appended in order.
    """
    if len(copies) != base.n:
        raise GraphBuildError(
            f"need one copy per base vertex ({base.n}), got {len(copies)}"
        )
    edges = list(base.edges())
    roots = []
    offset = base.n
    for i, (h, root) in enumerate(copies):
        if not 0 <= root < h.n:
            raise GraphBuildError(f"root {root} invalid for copy of order {h.n}")
        for u, v in h.edges():
            edges.append((offset + u, offset + v))
        roots.append(offset + root)
        edges.append((i, offset + root))
        offset += h.n
    return build_graph(offset, edges), tuple(roots)


def gen_star(leaves: int) -> Graph:
    """Star with center 0 and the given number of leaves."""
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def gen_two_star_family(
    m1: int, m2: int, extra_edges: int = 0, seed: int = 0
) -> Tuple[Graph, Tuple[int, int]]:
    """Two stars with centers 0 and 1 linked only through leaf-leaf edges.

    Leaves 2..m1+1 belong to center 0, the rest to center 1. One cross edge
    guarantees connectivity; extra seeded leaf-leaf edges may be added. No
    vertex is ever adjacent to both centers and the centers stay non-adjacent.
    """
    if m1 < 2 or m2 < 2:
        raise GraphBuildError("both star sizes must be at least 2")
    n = m1 + m2 + 2
    part1 = list(range(2, 2 + m1))
    part2 = list(range(2 + m1, n))
    edges = [(0, v) for v in part1] + [(1, v) for v in part2]
    edges.append((part1[0], part2[0]))
    rng = random.Random(seed)
    leaves = part1 + part2
    candidates = [
        (u, v)
        for i, u in enumerate(leaves)
        for v in leaves[i + 1 :]
        if (u, v) != (part1[0], part2[0])
    ]
    if extra_edges:
        edges.extend(rng.sample(candidates, min(extra_edges, len(candidates))))
    return build_graph(n, edges), (0, 1)


def gen_rooted_star_family(
    base: Graph, star_sizes: Sequence[int]
) -> Tuple[Graph, Tuple[int, ...]]:
    """Rooted product of base with stars rooted at their centers.

    Sizes must be non-increasing and strictly exceed the base max degree;
    the returned roots are the star centers, the intended optimal set.
    """
    sizes = list(star_sizes)
    if len(sizes) != base.n:
        raise GraphBuildError(f"need {base.n} star sizes, got {len(sizes)}")
    if any(sizes[i] < sizes[i + 1] for i in range(len(sizes) - 1)):
        raise GraphBuildError("star sizes must be non-increasing")
    if sizes and sizes[-1] <= base.max_degree():
        raise GraphBuildError(
            "smallest star size must exceed the base graph's max degree"
        )
    copies = [(gen_star(s), 0) for s in sizes]
    return gen_rooted_product(base, copies)


def gen_path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
