import random

import pytest

from smhc.graph import Graph, mask_of, cycle_graph, path_graph, complete_graph
from smhc.cuts import mm_cut_function, sm_cut_function
from smhc.branchdec import (BranchDecomposition, SizeLimitExceeded,
                            exact_branch_width, exact_best_decomposition,
                            enumerate_decompositions, greedy_decomposition,
                            approx_decomposition, normalized_decomposition)
from smhc.generators import random_connected_graph, caterpillar_decomposition


def test_two_leaf_tree():
    bd = BranchDecomposition([(0, 1)], {0: 4, 1: 7})
    assert bd.cuts() == [(1 << 4, 1 << 7)]


def test_cut_count_subcubic():
    for k in (2, 3, 4, 5, 6):
        bd = caterpillar_decomposition(list(range(k)))
        assert len(bd.cuts()) == (1 if k == 2 else 2 * k - 3)


def test_cuts_partition_elements():
    bd = caterpillar_decomposition([0, 1, 2, 3, 4])
    for a, b in bd.cuts():
        assert a | b == bd.elements and a & b == 0


def test_validate_rejects_bad_trees():
    with pytest.raises(ValueError):
        BranchDecomposition([(0, 1), (2, 3)], {0: 0, 1: 1, 3: 2})  # forest
    with pytest.raises(ValueError):
        BranchDecomposition([(0, 1), (1, 2), (1, 3), (1, 4)],
                            {0: 0, 2: 1, 3: 2, 4: 3})  # degree 4


def test_f_width_k6_sm():
    g = complete_graph(6)
    bd = caterpillar_decomposition(list(g.vertices))
    assert bd.f_width(sm_cut_function(g)) == 1


def test_exact_widths():
    assert exact_best_decomposition(cycle_graph(4), sm_cut_function(cycle_graph(4)))[0] == 1
    assert exact_best_decomposition(cycle_graph(5), mm_cut_function(cycle_graph(5)))[0] == 2
    assert exact_best_decomposition(path_graph(4), mm_cut_function(path_graph(4)))[0] == 1
    assert exact_best_decomposition(complete_graph(5), sm_cut_function(complete_graph(5)))[0] == 1


def test_exact_refuses_oversized():
    g = cycle_graph(13)
    with pytest.raises(SizeLimitExceeded):
        exact_best_decomposition(g, mm_cut_function(g))


def test_exact_decomposition_achieves_width():
    g = cycle_graph(6)
    f = mm_cut_function(g)
    w, bd = exact_best_decomposition(g, f)
    assert bd.f_width(f) == w
    assert bd.elements == g.vmask


@pytest.mark.parametrize("seed", range(8))
def test_subset_dp_matches_literal_enumeration(seed):
    rng = random.Random(seed)
    g = random_connected_graph(5, rng)
    f = mm_cut_function(g)
    w, _ = exact_branch_width(list(g.vertices), f)
    best = min(bd.f_width(f) for bd in enumerate_decompositions(list(g.vertices)))
    assert w == best


def test_greedy_never_beats_exact():
    rng = random.Random(11)
    for _ in range(10):
        g = random_connected_graph(7, rng)
        f = mm_cut_function(g)
        w, _ = exact_branch_width(list(g.vertices), f)
        assert greedy_decomposition(f, list(g.vertices)).f_width(f) >= w


def test_approx_backends():
    g = cycle_graph(5)
    f = mm_cut_function(g)
    assert approx_decomposition(f, list(g.vertices), "exact").f_width(f) == 2
    assert approx_decomposition(f, list(g.vertices), "greedy").f_width(f) >= 2
    with pytest.raises(ValueError):
        approx_decomposition(f, list(g.vertices), "bogus")


def test_normalized_splices_degree_two():
    # path of internal nodes 10-11-12 with leaves at the ends: 11 is spliced
    bd = normalized_decomposition([(0, 10), (10, 11), (11, 12), (12, 1)],
                                  {0: 0, 1: 1})
    assert all(len([w for (u, w) in bd.edges if u == n]
                   + [u for (u, w) in bd.edges if w == n]) != 2
               for n in bd.nodes if n not in bd.leaf_map)


def test_json_roundtrip():
    bd = caterpillar_decomposition([3, 5, 8, 9])
    again = BranchDecomposition.from_json(bd.to_json())
    assert again.edges == bd.edges and again.leaf_map == bd.leaf_map
