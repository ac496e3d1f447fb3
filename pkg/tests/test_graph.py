import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdomset import (
    VertexSet,
    build_graph,
    gen_petersen,
    gen_random,
    is_dominating,
    is_global_dominating,
    metrics,
    private_neighbors,
)
from gdomset.errors import GraphBuildError
from gdomset.graph import bits


def mask(*vs):
    out = 0
    for v in vs:
        out |= 1 << v
    return out


class TestBuildGraph:
    def test_path(self, p4):
        assert p4.n == 4 and p4.m == 3
        assert p4.has_edge(0, 1) and p4.has_edge(2, 3)
        assert not p4.has_edge(0, 3)

    def test_duplicate_edges_collapse(self):
        g = build_graph(3, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_self_loop_rejected(self):
        with pytest.raises(GraphBuildError, match=r"\(0,0\)"):
            build_graph(2, [(0, 0)])

    def test_endpoint_out_of_range(self):
        with pytest.raises(GraphBuildError):
            build_graph(2, [(0, 2)])

    def test_symmetry_and_size(self, petersen):
        for u in range(petersen.n):
            for v in bits(petersen.adj[u]):
                assert petersen.has_edge(v, u)
        assert petersen.m == sum(petersen.degree(v) for v in range(10)) // 2


class TestComplement:
    def test_p4_nonneighbors(self, p4):
        assert p4.complement_neighbors(0) == mask(2, 3)

    def test_complete_graph(self):
        k4 = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        for v in range(4):
            assert k4.complement_neighbors(v) == 0

    def test_petersen_vertex0(self, petersen):
        # N[0] = {0,1,4,5}; the other six are non-neighbors
        assert petersen.complement_neighbors(0) == mask(2, 3, 6, 7, 8, 9)

    def test_partition_of_v(self, petersen):
        for v in range(petersen.n):
            nb = petersen.adj[v]
            cnb = petersen.complement_neighbors(v)
            assert nb & cnb == 0
            assert nb | cnb | (1 << v) == petersen.full_mask

    def test_materialized_complement(self, p4):
        c = p4.complement()
        assert sorted(c.edges()) == [(0, 2), (0, 3), (1, 3)]


class TestMetrics:
    def test_p4(self, p4):
        mt = metrics(p4)
        assert (mt.radius, mt.diameter, mt.support_count) == (2, 3, 2)
        assert mt.connected and mt.complement_connected

    def test_petersen(self, petersen):
        mt = metrics(petersen)
        assert (mt.radius, mt.diameter, mt.support_count) == (2, 2, 0)

    def test_star(self):
        star = build_graph(6, [(0, i) for i in range(1, 6)])
        mt = metrics(star)
        assert (mt.radius, mt.diameter, mt.support_count) == (1, 2, 1)
        assert not mt.complement_connected

    def test_disconnected_markers(self):
        g = build_graph(4, [(0, 1), (2, 3)])
        mt = metrics(g)
        assert mt.radius is None and mt.diameter is None
        assert not mt.connected


class TestDomination:
    def test_p4_interior(self, p4):
        assert is_dominating(p4, VertexSet(4, [1, 2]))

    def test_p4_single_endpoint(self, p4):
        assert not is_dominating(p4, VertexSet(4, [0]))

    def test_p4_complement(self, p4):
        assert is_dominating(p4, VertexSet(4, [0, 3]), in_complement=True)

    def test_global_p4(self, p4):
        assert is_global_dominating(p4, VertexSet(4, [0, 3]))
        # {0,1} leaves vertex 3 undominated in the path itself
        assert not is_global_dominating(p4, VertexSet(4, [0, 1]))

    def test_global_petersen_known_set(self, petersen):
        assert is_global_dominating(petersen, VertexSet(10, [0, 2, 6, 9]))

    def test_whole_vertex_set(self, petersen):
        assert is_global_dominating(petersen, VertexSet(10, range(10)))

    def test_empty_set_rejected(self, p4):
        assert not is_global_dominating(p4, VertexSet(4))


class TestPrivateNeighbors:
    def test_star_center(self):
        star = build_graph(5, [(0, i) for i in range(1, 5)])
        pn = private_neighbors(star, 0, VertexSet(5, [0]))
        assert sorted(pn.order) == [1, 2, 3, 4]

    def test_p4_literal_definition_includes_s_members(self, p4):
        s = VertexSet(4, [1, 2])
        pn = private_neighbors(p4, 1, s)
        # 0's only S-neighbor is 1; 2 in S also has N(2) ∩ S = {1}
        assert sorted(pn.order) == [0, 2]

    def test_k4_full_set(self):
        k4 = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
        pn = private_neighbors(k4, 0, VertexSet(4, range(4)))
        assert len(pn) == 0

    def test_requires_membership(self, p4):
        with pytest.raises(ValueError):
            private_neighbors(p4, 0, VertexSet(4, [1, 2]))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(6, 14), density=st.sampled_from([0.4, 0.5, 0.6]), seed=st.integers(0, 50))
def test_global_domination_self_dual(n, density, seed):
    g, _ = gen_random(n, density, seed)
    gc = g.complement()
    d = VertexSet(n, range(0, n, 2))
    assert is_global_dominating(g, d) == is_global_dominating(gc, d)
