from pathlib import Path

from hypothesis import given, settings
from hypothesis import strategies as st

from gdomset import VertexSet, build_model, export_lp, gen_random, is_global_dominating

GOLDEN = Path(__file__).parent / "data" / "p4.lp"


def test_model_rows_are_closed_neighborhoods(p4):
    model = build_model(p4)
    assert model.n == 4
    assert model.a_rows == (0b0011, 0b0111, 0b1110, 0b1100)
    assert model.b_rows == (0b1101, 0b1010, 0b0101, 0b1011)


def test_satisfies_matches_feasibility(p4):
    from gdomset.ilp import satisfies

    model = build_model(p4)
    assert satisfies(model, 0b1001)
    assert not satisfies(model, 0b0011)
    assert not satisfies(model, 0)


def test_export_lp_golden(p4):
    text = export_lp(build_model(p4), name="p4")
    assert text == GOLDEN.read_text()
    assert text.count(">= 1") == 2 * p4.n


def test_export_lp_structure(petersen):
    text = export_lp(build_model(petersen), name="x")
    lines = text.splitlines()
    assert lines[0] == "\\ x"
    assert lines[1] == "Minimize"
    assert lines[3] == "Subject To"
    assert lines[-1] == "End"
    assert sum(1 for line in lines if ">= 1" in line) == 20


@settings(max_examples=25, deadline=None)
@given(n=st.integers(5, 10), seed=st.integers(0, 30))
def test_feasible_assignments_are_exactly_the_dominating_sets(n, seed):
    from gdomset.ilp import satisfies

    g, _ = gen_random(n, 0.5, seed)
    model = build_model(g)
    for mask in range(1 << n):
        members = [v for v in range(n) if mask >> v & 1]
        assert satisfies(model, mask) == is_global_dominating(g, VertexSet(n, members))
