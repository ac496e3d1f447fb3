"""Reverse-insertion-order purification of a global dominating set.

A vertex is removed when the remaining set still globally dominates, which
covers both the empty-private-neighborhood test and the vertex's own
domination after its removal. One reverse pass yields a minimal set.
"""

from dataclasses import dataclass
from typing import List, Tuple

from .errors import InfeasibleSetError
from .graph import Graph, VertexSet, is_global_dominating


@dataclass(frozen=True)
class PurifyReport:
    before: int
    after: int
    removed: Tuple[int, ...]
    pct: float


def purify(g: Graph, d: VertexSet) -> Tuple[VertexSet, PurifyReport]:
    """Drop redundant vertices of d in reverse insertion order."""
    if not is_global_dominating(g, d):
        raise InfeasibleSetError("purify requires a global dominating set")
    current = d.copy()
    removed: List[int] = []
    for v in reversed(d.order):
        if len(current) <= 1:
            break
        trial = current.without(v)
        if is_global_dominating(g, trial):
            current = trial
            removed.append(v)
    before, after = len(d), len(current)
    pct = 100.0 * (before - after) / before if before else 0.0
    return current, PurifyReport(
        before=before, after=after, removed=tuple(removed), pct=pct
    )
