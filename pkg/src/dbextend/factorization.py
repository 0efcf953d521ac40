"""Edge partition of G(k, m) into necklace cycles, and the graph of circular words."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .graph import GraphParams
from .words import Necklace, Word, canonical_rotation, iter_necklaces


@dataclass(frozen=True)
class NecklaceCycle:
    necklace: Necklace
    edges: tuple[Word, ...]

    def vertices(self) -> list[Word]:
        return [e[:-1] for e in self.edges]


def cycle_of(necklace: Necklace, start: Sequence[int] | None = None) -> NecklaceCycle:
    """The simple cycle of G(k, L-1) whose edges are the rotations of `necklace`.

    Edges are listed in walking order (each head is the next tail), starting at
    the rotation `start` if given.
    """
    first = necklace.canon if start is None else tuple(start)
    edges = tuple(first[i:] + first[:i] for i in range(necklace.period))
    return NecklaceCycle(necklace, edges)


def necklace_cycles(params: GraphParams) -> list[NecklaceCycle]:
    return [cycle_of(c) for c in iter_necklaces(params.m + 1, params.k)]


def is_augmenting_edge(edge: Sequence[int], k: int) -> bool:
    """True iff the edge of G(k+1, m) is absent from G(k, m).

    Tail or head containing the new symbol k is the same as the edge word
    containing it, since the edge word is the union of the two.
    """
    return k in edge


def windows(word: Sequence[int], length: int) -> set[Word]:
    w = tuple(word)
    doubled = w + w
    return {doubled[i : i + length] for i in range(len(w))}


def cw_adjacent(v: Necklace | Sequence[int], w: Necklace | Sequence[int]) -> bool:
    """[v] -> [w] iff [a u] = [v] and [u b] = [w] for some u, a, b.

    The (L-1)-suffixes of rotations of v are its circular windows, as are the
    (L-1)-prefixes of rotations of w, so this is a shared-window test.
    """
    v = v.canon if isinstance(v, Necklace) else tuple(v)
    w = w.canon if isinstance(w, Necklace) else tuple(w)
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    L = len(v)
    if L == 1:
        return True
    return not windows(v, L - 1).isdisjoint(windows(w, L - 1))


class CircularWordGraph:
    """Adjacency oracle for C(size, L), optionally restricted to necklaces containing `sym`."""

    def __init__(self, size: int, length: int, sym: int | None = None):
        self.size = size
        self.length = length
        self.sym = sym

    def __contains__(self, c: Necklace) -> bool:
        return (
            c.length == self.length
            and all(0 <= a < self.size for a in c.canon)
            and (self.sym is None or self.sym in c.canon)
        )

    def nodes(self) -> Iterator[Necklace]:
        for c in iter_necklaces(self.length, self.size):
            if c in self:
                yield c

    def adjacent(self, v: Necklace, w: Necklace) -> bool:
        return v in self and w in self and cw_adjacent(v, w)

    def neighbors(self, v: Necklace) -> list[Necklace]:
        out = set()
        for u in windows(v.canon, self.length - 1):
            for b in range(self.size):
                c = canonical_rotation(u + (b,))
                if c in self:
                    out.add(c)
        return sorted(out, key=lambda c: c.canon)


def restricted_cw_graph(k: int, m: int) -> CircularWordGraph:
    """C~(k+1, m+1): necklaces of length m+1 over k+1 symbols that contain the new symbol."""
    return CircularWordGraph(k + 1, m + 1, sym=k)
