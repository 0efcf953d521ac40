from itertools import product

import pytest

from dbextend.factorization import cw_adjacent, is_augmenting_edge
from dbextend.graph import GraphParams
from dbextend.petals import build_petals_tree, petal_for_vertex, s_runs
from dbextend.words import count_symbol, iter_necklaces

GRID = [(k, m) for k in (2, 3, 4) for m in range(0, 6) if (k + 1) ** (m + 1) <= 20000]


@pytest.fixture(scope="module")
def tree22():
    return build_petals_tree(2, 2)


def test_depth_one_children(tree22):
    roots = {nd.necklace.canon: nd.entry_vertex for nd in tree22.roots()}
    assert roots == {(0, 0, 2): (0, 0), (0, 1, 2): (0, 1), (0, 2, 1): (1, 0), (1, 1, 2): (1, 1)}
    assert len(tree22.nodes) == 7


def test_all_s_node(tree22):
    nd = tree22.nodes[(2, 2, 2)]
    assert nd.depth == 3
    assert nd.parent in {(0, 2, 2), (1, 2, 2)}


def test_petal_for_01_is_one_necklace(tree22):
    p = petal_for_vertex(tree22, (0, 1))
    assert p.edges == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert p.labels == (2, 0, 1)


def test_petal_for_10_holds_four_necklaces(tree22):
    p = petal_for_vertex(tree22, (1, 0))
    assert len(p) == 10
    classes = {min(e[i:] + e[:i] for i in range(3)) for e in p.edges}
    assert classes == {(0, 2, 1), (0, 2, 2), (1, 2, 2), (2, 2, 2)}


def test_petal_for_00(tree22):
    assert len(petal_for_vertex(tree22, (0, 0))) == 3


def test_petal_rejects_bad_vertex(tree22):
    with pytest.raises(ValueError):
        tree22.petal((0, 2))
    with pytest.raises(ValueError):
        tree22.petal((0,))


@pytest.mark.parametrize("k, m", GRID)
def test_tree_invariants(k, m):
    s = k
    tree = build_petals_tree(k, m)
    expected = [c.canon for c in iter_necklaces(m + 1, k + 1) if s in c.canon]
    assert sorted(tree.nodes) == expected
    assert len(tree.roots()) == k**m
    for c, nd in tree.nodes.items():
        assert nd.depth == count_symbol(c, s)
        assert min(nd.entry_edge[i:] + nd.entry_edge[:i] for i in range(m + 1)) == c
        if nd.parent is None:
            assert nd.depth == 1
            continue
        par = tree.nodes[nd.parent]
        assert par.depth == nd.depth - 1
        assert cw_adjacent(par.necklace, nd.necklace)
        # the parent's cycle leaves the entry vertex by a non-s edge
        assert any(e[:-1] == nd.entry_vertex and e[-1] != s for e in par.cycle_edges())
    assert len({nd.entry_vertex for nd in tree.nodes.values()}) == len(tree.nodes)


@pytest.mark.parametrize("k, m", GRID)
def test_petals_partition_augmenting_edges(k, m):
    s = k
    n = m + 1
    tree = build_petals_tree(k, m)
    seen = set()
    total = 0
    for v in product(range(k), repeat=m):
        p = tree.petal(v)
        total += len(p)
        seen.update(p.edges)
        assert p.edges[0] == v + (s,)
        # closed walk
        for a, b in zip(p.edges, p.edges[1:] + p.edges[:1]):
            assert a[1:] == b[:-1]
        # only s-free vertex visited is the anchor, at the start
        tails = [e[:-1] for e in p.edges]
        assert [t for t in tails if s not in t] == [v]
        assert all(is_augmenting_edge(e, k) for e in p.edges)
        if m:
            assert p.edges[-1] == (s,) + v
        runs = s_runs(p.labels, s)
        if p.labels[-1] != s:
            assert runs[-1] <= n - 1
            runs = runs[:-1]
        assert all(r <= n - 2 for r in runs)
        lab = p.labels
        for i in range(len(lab) - n + 1):
            assert s in lab[i : i + n]
    assert total == len(seen) == (k + 1) ** n - k**n


def test_s_runs():
    assert s_runs((2, 2, 2, 0, 2, 1, 2, 2, 1, 0), 2) == [1, 1, 2]
    assert s_runs((0, 0, 2, 1), 2) == [2, 1]


def test_tree_dump_is_deterministic():
    assert build_petals_tree(3, 2).dump() == build_petals_tree(3, 2).dump()
