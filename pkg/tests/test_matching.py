import random
from collections import Counter

import networkx as nx
import numpy as np
import pytest
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from dbextend.graph import GraphParams, generate_de_bruijn, sequence_to_cycle
from dbextend.matching import (
    FlowNetwork,
    HallViolation,
    Sectioning,
    build_distribution_graph,
    build_flow_network,
    edmonds_karp,
    perfect_matching,
    sections_of,
)

V = (1, 1, 0, 0, 0, 1, 0, 1)
GRID = [(k, m) for k in (2, 3, 4) for m in range(1, 5)]


def sectioning(seq, k, m):
    return sections_of(sequence_to_cycle(seq, GraphParams(k, m)))


def random_sectioning(k, m, seed):
    return sectioning(generate_de_bruijn(k, m + 1, rng=random.Random(seed)), k, m)


def test_sections_worked_example():
    sec = sectioning(V, 2, 2)
    assert [sec.heads(j) for j in range(4)] == [
        [(1, 0), (0, 0)],
        [(0, 0), (0, 1)],
        [(1, 0), (0, 1)],
        [(1, 1), (1, 1)],
    ]
    assert [[i for i, _ in s] for s in sec.sections] == [[1, 2], [3, 4], [5, 6], [7, 8]]


def test_sections_small():
    sec = sectioning((0, 0, 1, 1), 2, 1)
    assert len(sec) == 2 and all(len(s) == 2 for s in sec.sections)


@pytest.mark.parametrize("k, m", GRID)
def test_sections_flatten_to_heads(k, m):
    seq = generate_de_bruijn(k, m + 1, rng=random.Random(k * 10 + m))
    c = sequence_to_cycle(seq, GraphParams(k, m))
    sec = sections_of(c)
    assert len(sec) == k**m
    assert sec.flat_heads() == c.head_codes()


def test_distribution_graph_worked_example():
    dg = build_distribution_graph(sectioning(V, 2, 2))
    p = GraphParams(2, 2)
    by_vertex = Counter()
    for v, j, _ in dg.edges:
        by_vertex[(p.decode(v), j)] += 1
    assert by_vertex[((0, 0), 0)] == 1 and by_vertex[((0, 0), 1)] == 1
    assert by_vertex[((1, 1), 3)] == 2
    assert all(dg.vertex_degree(v) == 2 for v in range(4))
    assert all(dg.section_degree(j) == 2 for j in range(4))


@pytest.mark.parametrize("k, m, nv, ne", [(2, 2, 10, 16), (3, 2, 20, 45), (2, 1, 6, 8)])
def test_flow_network_size(k, m, nv, ne):
    seq = generate_de_bruijn(k, m + 1)
    net = build_flow_network(build_distribution_graph(sectioning(seq, k, m)))
    assert (net.n_nodes, net.n_arcs) == (nv, ne)
    assert all(c == 1 for c in net.caps)


def test_edmonds_karp_single_arc():
    net = FlowNetwork(4, 0, 3)
    for u, v in [(0, 1), (1, 2), (2, 3)]:
        net.add_arc(u, v)
    fr = edmonds_karp(net)
    assert fr.value == 1 and fr.flow == (1, 1, 1)


def test_edmonds_karp_textbook_network():
    # CLRS figure 26.1, max flow 23
    net = FlowNetwork(6, 0, 5)
    for u, v, c in [(0, 1, 16), (0, 2, 13), (1, 3, 12), (2, 1, 4), (2, 4, 14),
                    (3, 2, 9), (3, 5, 20), (4, 3, 7), (4, 5, 4)]:
        net.add_arc(u, v, c)
    assert edmonds_karp(net).value == 23


def scipy_max_flow(net):
    # parallel arcs cannot occur in distribution networks, but sum just in case
    dense = np.zeros((net.n_nodes, net.n_nodes), dtype=np.int32)
    for u, v, c in zip(net.tails, net.heads, net.caps):
        dense[u, v] += c
    return maximum_flow(csr_matrix(dense), net.source, net.sink).flow_value


def check_flow(net, fr):
    inflow = [0] * net.n_nodes
    outflow = [0] * net.n_nodes
    for u, v, c, f in zip(net.tails, net.heads, net.caps, fr.flow):
        assert 0 <= f <= c
        outflow[u] += f
        inflow[v] += f
    for x in range(net.n_nodes):
        if x not in (net.source, net.sink):
            assert inflow[x] == outflow[x]
    assert outflow[net.source] == inflow[net.sink] == fr.value


@pytest.mark.parametrize("k, m", GRID)
@pytest.mark.parametrize("seed", range(3))
def test_edmonds_karp_against_oracles(k, m, seed):
    sec = random_sectioning(k, m, seed)
    dg = build_distribution_graph(sec)
    net = build_flow_network(dg)
    fr = edmonds_karp(net)
    check_flow(net, fr)
    assert fr.value == k**m == scipy_max_flow(net)
    g = nx.Graph()
    left = {("v", v) for v in range(k**m)}
    g.add_nodes_from(left)
    g.add_edges_from((("v", v), ("s", j)) for v, j, _ in dg.edges)
    assert len(nx.bipartite.maximum_matching(g, top_nodes=left)) // 2 == k**m


@pytest.mark.parametrize("k, m", GRID)
def test_perfect_matching_is_bijection(k, m):
    sec = random_sectioning(k, m, 7)
    mr = perfect_matching(sec)
    assert sorted(v for v, _ in mr.assignment) == list(range(k**m))
    for j, (v, i) in enumerate(mr.assignment):
        assert (i, v) in sec.sections[j]
        assert j * k + 1 <= i <= j * k + k


def test_perfect_matching_small_examples():
    mr = perfect_matching(sectioning(V, 2, 2))
    assert len({mr.vertex(j) for j in range(4)}) == 4
    mr = perfect_matching(sectioning((0, 0, 1, 1), 2, 1))
    assert {mr.vertex(0), mr.vertex(1)} == {(0,), (1,)}


def test_forced_matching():
    # every section repeats one vertex k times: only one matching exists
    p = GraphParams(2, 1)
    sec = Sectioning(p, (((1, 1), (2, 1)), ((3, 0), (4, 0))))
    mr = perfect_matching(sec)
    assert mr.assignment[0][0] == 1 and mr.assignment[1][0] == 0


def test_hall_violation_is_reported():
    p = GraphParams(2, 1)
    sec = Sectioning(p, (((1, 0), (2, 0)), ((3, 0), (4, 0))))
    with pytest.raises(HallViolation):
        perfect_matching(sec)


def test_matching_is_deterministic():
    sec = random_sectioning(3, 3, 11)
    assert perfect_matching(sec) == perfect_matching(sec)
