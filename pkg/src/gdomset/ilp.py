"""0-1 set-cover model of the global domination problem and its LP-format
serialization (CPLEX-LP dialect, export only)."""

from dataclasses import dataclass
from typing import List, Tuple

from .graph import Graph, bits


@dataclass(frozen=True)
class IlpModel:
    """Closed-neighborhood cover matrices of G and its complement as
    bitmask rows; the objective is all-ones over n binary variables."""

    n: int
    a_rows: Tuple[int, ...]
    b_rows: Tuple[int, ...]


def build_model(g: Graph) -> IlpModel:
    a_rows = tuple(g.closed_neighbors(v) for v in range(g.n))
    b_rows = tuple(g.closed_complement_neighbors(v) for v in range(g.n))
    return IlpModel(n=g.n, a_rows=a_rows, b_rows=b_rows)


def satisfies(model: IlpModel, assignment: int) -> bool:
    """True iff the 0-1 assignment (bitmask) satisfies every cover row."""
    for row in model.a_rows:
        if row & assignment == 0:
            return False
    for row in model.b_rows:
        if row & assignment == 0:
            return False
    return True


def export_lp(model: IlpModel, name: str = "gdom") -> str:
    """Serialize the model to LP text. Layout is fixed for golden files."""
    lines: List[str] = [f"\\ {name}", "Minimize"]
    obj = " + ".join(f"x{i}" for i in range(model.n))
    lines.append(f" obj: {obj}")
    lines.append("Subject To")
    for i, row in enumerate(model.a_rows):
        terms = " + ".join(f"x{j}" for j in bits(row))
        lines.append(f" g_{i}: {terms} >= 1")
    for i, row in enumerate(model.b_rows):
        terms = " + ".join(f"x{j}" for j in bits(row))
        lines.append(f" c_{i}: {terms} >= 1")
    lines.append("Binary")
    lines.append(" " + " ".join(f"x{i}" for i in range(model.n)))
    lines.append("End")
    return "\n".join(lines) + "\n"
