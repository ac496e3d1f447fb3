import time

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gdomset import (
    VertexSet,
    bgds,
    bounds,
    brute_force_gamma,
    brute_force_gamma_g,
    build_priority_list,
    gen_path,
    gen_random,
    is_global_dominating,
    next_candidate,
)
from gdomset.errors import GdomsetError, InfeasibleSetError


class TestBruteForce:
    def test_p4(self, p4):
        res = brute_force_gamma_g(p4)
        assert res.cardinality == 2 and res.optimal
        assert is_global_dominating(p4, res.vertices)

    def test_petersen(self, petersen):
        assert brute_force_gamma_g(petersen).cardinality == 4

    def test_petersen_plain_domination(self, petersen):
        assert brute_force_gamma(petersen).cardinality == 3

    def test_nine_vertex_example(self, nine_vertex_example):
        assert brute_force_gamma_g(nine_vertex_example).cardinality == 3

    def test_size_limit(self):
        with pytest.raises(GdomsetError, match="brute force"):
            brute_force_gamma_g(gen_path(25))

    def test_cap_too_small(self, petersen):
        with pytest.raises(InfeasibleSetError):
            brute_force_gamma_g(petersen, cap=2)


class TestPriorityList:
    def test_seed_first_then_balanced_degree(self, petersen):
        seed = VertexSet(10, [9, 0])
        plist = build_priority_list(petersen, seed)
        assert plist.ranking[:2] == (9, 0)
        # every Petersen vertex has deg 3, codeg 6: remaining ties break by id
        assert plist.ranking[2:] == (1, 2, 3, 4, 5, 6, 7, 8)

    def test_ranking_is_permutation(self, p4):
        plist = build_priority_list(p4, VertexSet(4, [2]))
        assert sorted(plist.ranking) == [0, 1, 2, 3]

    def test_next_candidate_lexicographic(self, p4):
        plist = build_priority_list(p4, VertexSet(4, [3]))
        combos = list(next_candidate(plist, 2))
        assert combos[0] == plist.ranking[:2]
        assert len(combos) == 6

    def test_next_candidate_rejects_nonpositive(self, p4):
        plist = build_priority_list(p4, VertexSet(4))
        with pytest.raises(ValueError):
            next(next_candidate(plist, 0))


class TestBgds:
    def test_p4(self, p4):
        res = bgds(p4)
        assert res.cardinality == 2 and res.optimal

    def test_petersen(self, petersen):
        res = bgds(petersen)
        assert res.cardinality == 4
        assert is_global_dominating(petersen, res.vertices)

    def test_explicit_seed(self, petersen):
        res = bgds(petersen, seed=VertexSet(10, [0, 2, 6, 9]))
        assert res.cardinality == 4

    def test_infeasible_seed_rejected(self, petersen):
        with pytest.raises(InfeasibleSetError):
            bgds(petersen, seed=VertexSet(10, [0, 1]))

    def test_size_limit(self):
        with pytest.raises(GdomsetError, match="bgds"):
            bgds(gen_path(70), size_limit=64)

    def test_expired_deadline_raises(self):
        g, _ = gen_random(40, 0.5, 7)
        with pytest.raises(TimeoutError):
            bgds(g, deadline=time.monotonic() - 1.0)


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(6, 13),
    density=st.sampled_from([0.4, 0.5, 0.6]),
    seed=st.integers(0, 60),
)
def test_bgds_matches_brute_force(n, density, seed):
    g, _ = gen_random(n, density, seed)
    opt = brute_force_gamma_g(g).cardinality
    res = bgds(g)
    assert res.cardinality == opt
    assert is_global_dominating(g, res.vertices)
    b = bounds(g)
    assert b.L <= opt <= b.U
