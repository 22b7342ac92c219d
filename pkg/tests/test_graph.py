import pytest
from hypothesis import given, strategies as st

from smhc.graph import (Graph, bits, mask_of, path_graph, cycle_graph,
                        complete_graph, petersen_graph, parse_edge_list,
                        format_edge_list)


def small_graphs():
    return st.integers(3, 8).flatmap(
        lambda n: st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))
            .filter(lambda e: e[0] != e[1]),
            max_size=2 * n,
        ).map(lambda es: Graph(range(n), es)))


def test_bits_roundtrip():
    assert list(bits(0b101101)) == [0, 2, 3, 5]
    assert mask_of([0, 2, 3, 5]) == 0b101101


def test_dedupe_and_ordering():
    g = Graph(range(3), [(2, 1), (1, 2), (0, 1)])
    assert g.edges == ((0, 1), (1, 2))


def test_self_loop_rejected():
    with pytest.raises(ValueError):
        Graph(range(3), [(1, 1)])


def test_edge_outside_vertex_set_rejected():
    with pytest.raises(ValueError):
        Graph(range(3), [(0, 5)])


def test_induced_subgraph():
    g = cycle_graph(5)
    h = g.induced_subgraph(0b01011)
    assert h.vertices == (0, 1, 3)
    assert h.edges == ((0, 1),)


def test_cut_graph_partition():
    g = cycle_graph(6)
    a = 0b000111
    cut = g.cut_graph(a)
    inner = set(g.induced_subgraph(a).edges)
    outer = set(g.induced_subgraph(g.vmask & ~a).edges)
    crossing = set(cut.graph.edges)
    assert inner | outer | crossing == set(g.edges)
    assert not (inner & crossing) and not (outer & crossing) and not (inner & outer)


def test_contract_path_edge():
    g = path_graph(3)  # 0-1-2
    h, m = g.contract_edge(0, 1)
    assert h.n == 2
    assert h.edges == ((2, m),)


def test_contract_c4_gives_triangle():
    g = cycle_graph(4)
    h, _ = g.contract_edge(0, 1)
    assert h.n == 3 and h.m == 3


def test_contract_k4_gives_k3():
    g = complete_graph(4)
    h, _ = g.contract_edge(0, 1)
    assert h.n == 3 and h.m == 3


def test_contract_requires_edge():
    with pytest.raises(ValueError):
        cycle_graph(5).contract_edge(0, 2)


def test_neighborhood():
    g = cycle_graph(4)
    assert g.neighborhood(1 << 1) == (1 << 0) | (1 << 2)
    assert g.neighborhood(g.vmask) == 0


def test_petersen_degrees():
    g = petersen_graph()
    assert g.n == 10 and g.m == 15
    assert all(g.degree(v) == 3 for v in g.vertices)
    assert g.neighborhood(1 << 0) == mask_of([1, 4, 5])


def test_parse_format_roundtrip():
    g = petersen_graph()
    assert parse_edge_list(format_edge_list(g)) == g


def test_parse_comments_and_blanks():
    g = parse_edge_list("# comment\n3 2\n\n0 1\n1 2  # trailing\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text", ["", "nonsense", "3 5\n0 1\n", "2 1\n0 3\n"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)


@given(small_graphs())
def test_roundtrip_random(g):
    assert parse_edge_list(format_edge_list(g)) == g


@given(small_graphs(), st.integers(0, 255))
def test_cut_edges_partition_random(g, a):
    a &= g.vmask
    inner = g.edges_within(a)
    outer = g.edges_within(g.vmask & ~a)
    crossing = g.edges_between(a, g.vmask & ~a)
    assert inner | outer | crossing == (1 << g.m) - 1
    assert inner & crossing == 0 and outer & crossing == 0 and inner & outer == 0


@given(small_graphs(), st.integers(0, 255))
def test_neighborhood_disjoint(g, s):
    s &= g.vmask
    assert g.neighborhood(s) & s == 0
