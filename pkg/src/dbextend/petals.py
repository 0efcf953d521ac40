"""Petals tree over the necklaces that contain the new symbol, and petal extraction.

Nodes are necklaces of length m+1 over k+1 symbols containing s = k, layered
by their number of s's. A node c hangs below a parent P through a vertex w of
G(k+1, m): P's cycle leaves w by a non-s edge, and c is [w s], so c's cycle
leaves w by the s-edge. Walking a node's cycle and detouring into each child
at its entry vertex yields a closed walk; for a depth-1 node [v s] this walk
is the petal of the s-free vertex v.

The tree is grown greedily: depth-1 nodes are visited in colexicographic
order of their canonical words, and walking a node's cycle claims every
still-unclaimed necklace [u s] at each vertex u where the cycle continues
with a non-s edge, recursing depth first. Every necklace gets claimed because
its candidate parents are walked in full.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .words import Necklace, Word, canonical_rotation, necklaces


@dataclass
class PetalNode:
    necklace: Necklace
    depth: int
    entry_vertex: Word
    parent: Word | None  # canonical form of the parent, None under the root
    s: int
    children: list[Word] = field(default_factory=list)

    @property
    def entry_edge(self) -> Word:
        return self.entry_vertex + (self.s,)

    def cycle_edges(self) -> list[Word]:
        """Rotations of the necklace in walking order, starting with the entry edge."""
        r = self.entry_edge
        return [r[i:] + r[:i] for i in range(self.necklace.period)]


@dataclass(frozen=True)
class Petal:
    anchor: Word
    edges: tuple[Word, ...]

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(e[-1] for e in self.edges)

    def __len__(self):
        return len(self.edges)


class PetalsTree:
    def __init__(self, k: int, m: int, nodes: dict[Word, PetalNode]):
        self.k = k
        self.m = m
        self.nodes = nodes
        self._petals: dict[Word, Petal] = {}

    @property
    def s(self) -> int:
        return self.k

    def roots(self) -> list[PetalNode]:
        return [nd for nd in self.nodes.values() if nd.parent is None]

    def anchor_node(self, v: Sequence[int]) -> PetalNode:
        return self.nodes[canonical_rotation(tuple(v) + (self.s,)).canon]

    def petal(self, v: Sequence[int]) -> Petal:
        v = tuple(v)
        if len(v) != self.m or any(not 0 <= a < self.k for a in v):
            raise ValueError(f"{v} is not an s-free vertex of length {self.m}")
        if v not in self._petals:
            edges: list[Word] = []
            self._walk(self.anchor_node(v), edges)
            self._petals[v] = Petal(v, tuple(edges))
        return self._petals[v]

    def _walk(self, node: PetalNode, out: list[Word]) -> None:
        by_entry = {self.nodes[c].entry_vertex: self.nodes[c] for c in node.children}
        for i, e in enumerate(node.cycle_edges()):
            if i:
                child = by_entry.get(e[:-1])
                if child is not None:
                    self._walk(child, out)
            out.append(e)

    def dump(self) -> list[dict]:
        """Adjacency-list form, nodes sorted by (depth, canonical word)."""
        order = sorted(self.nodes.values(), key=lambda nd: (nd.depth, nd.necklace.canon))
        return [
            {
                "node": nd.necklace.canon,
                "depth": nd.depth,
                "parent": nd.parent,
                "entry_vertex": nd.entry_vertex,
                "children": list(nd.children),
            }
            for nd in order
        ]


def build_petals_tree(k: int, m: int) -> PetalsTree:
    s = k
    nodes: dict[Word, PetalNode] = {}

    def grow(node: PetalNode) -> None:
        for e in node.cycle_edges()[1:]:
            if e[-1] == s:
                continue
            u = e[:-1]
            c = canonical_rotation(u + (s,))
            if c.canon in nodes:
                continue
            child = PetalNode(c, node.depth + 1, u, node.necklace.canon, s)
            nodes[c.canon] = child
            node.children.append(c.canon)
            grow(child)

    first = necklaces(m + 1, k + 1, where=lambda c: c == 1)
    first.sort(key=lambda c: c.canon[::-1])
    for c in first:
        i = c.canon.index(s)
        entry = c.canon[i + 1 :] + c.canon[:i]
        nodes[c.canon] = PetalNode(c, 1, entry, None, s)
    for c in first:
        grow(nodes[c.canon])
    return PetalsTree(k, m, nodes)


def petal_for_vertex(tree: PetalsTree, v: Sequence[int]) -> Petal:
    return tree.petal(v)


def s_runs(labels: Sequence[int], s: int) -> list[int]:
    """Lengths of the maximal runs of non-s labels, in order (zero-length runs omitted)."""
    runs, cur = [], 0
    for a in labels:
        if a == s:
            if cur:
                runs.append(cur)
            cur = 0
        else:
            cur += 1
    if cur:
        runs.append(cur)
    return runs
