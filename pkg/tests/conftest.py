import pytest

from gdomset import build_graph, gen_petersen


@pytest.fixture
def p4():
    return build_graph(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def petersen():
    return gen_petersen()


# 9-vertex example where the greedy can land on 4 while the optimum is 3
FIG5_EDGES = [
    (0, 3), (2, 3), (1, 2), (1, 3), (0, 2), (2, 4),
    (3, 4), (4, 5), (4, 6), (1, 8), (0, 7),
]


@pytest.fixture
def nine_vertex_example():
    return build_graph(9, FIG5_EDGES)


# One line per acceptance criterion, echoed after the test summary.
ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.write_line("")
        terminalreporter.write_line("acceptance criteria:")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
