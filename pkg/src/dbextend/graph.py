"""Implicit de Bruijn graph G(k, m) and Eulerian cycles in it.

Vertices are words of length m, edges are words of length m+1. Internally a
word is packed into an int in base k (most significant symbol first), so the
edge leaving vertex ``v`` with label ``a`` is ``v*k + a`` and its head is that
code modulo k**m. An Eulerian cycle of G(k, m) is a de Bruijn sequence of
order m+1.
"""

from __future__ import annotations

import random
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import product

from .words import Word

DEFAULT_SIZE_CAP = 10**7


class NotDeBruijn(ValueError):
    pass


@dataclass(frozen=True)
class Check:
    """Outcome of a boolean check with a human readable reason on failure."""

    ok: bool
    detail: str = ""
    witness: object = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class GraphParams:
    k: int
    m: int

    def __post_init__(self):
        if self.k < 2 or self.m < 0:
            raise ValueError(f"need k >= 2 and m >= 0, got k={self.k}, m={self.m}")

    @property
    def n_vertices(self) -> int:
        return self.k**self.m

    @property
    def n_edges(self) -> int:
        return self.k ** (self.m + 1)

    def encode(self, word: Sequence[int]) -> int:
        code = 0
        for a in word:
            code = code * self.k + a
        return code

    def decode(self, code: int, length: int | None = None) -> Word:
        length = self.m if length is None else length
        out = [0] * length
        for i in range(length - 1, -1, -1):
            code, out[i] = divmod(code, self.k)
        return tuple(out)

    def head(self, edge_code: int) -> int:
        return edge_code % self.n_vertices

    def vertices(self) -> list[Word]:
        return [tuple(w) for w in product(range(self.k), repeat=self.m)]


def edge_word(tail: Sequence[int], label: int) -> Word:
    return tuple(tail) + (label,)


def head_of(edge: Sequence[int]) -> Word:
    return tuple(edge[1:])


@dataclass(frozen=True)
class EulerianCycle:
    params: GraphParams
    start_vertex: Word
    labels: tuple[int, ...]

    def edge_codes(self) -> list[int]:
        """Edge codes e_1..e_N in traversal order."""
        p = self.params
        nv, k = p.n_vertices, p.k
        v = p.encode(self.start_vertex)
        out = []
        for a in self.labels:
            e = v * k + a
            out.append(e)
            v = e % nv
        return out

    def head_codes(self) -> list[int]:
        nv = self.params.n_vertices
        return [e % nv for e in self.edge_codes()]

    def heads(self) -> list[Word]:
        return [self.params.decode(h) for h in self.head_codes()]


def sequence_to_cycle(seq: Sequence[int], params: GraphParams) -> EulerianCycle:
    k, m = params.k, params.m
    seq = tuple(seq)
    if len(seq) != params.n_edges:
        raise NotDeBruijn(f"expected length {params.n_edges}, got {len(seq)}")
    bad = [a for a in seq if not (isinstance(a, int) and 0 <= a < k)]
    if bad:
        raise NotDeBruijn(f"symbol {bad[0]!r} outside alphabet 0..{k - 1}")
    cycle = EulerianCycle(params, seq[:m], seq[m:] + seq[:m])
    seen = bytearray(params.n_edges)
    for i, e in enumerate(cycle.edge_codes()):
        if seen[e]:
            raise NotDeBruijn(
                f"edge {params.decode(e, m + 1)} repeated at edge index {i + 1}"
            )
        seen[e] = 1
    return cycle


def cycle_to_sequence(cycle: EulerianCycle) -> Word:
    m = cycle.params.m
    labels = cycle.labels
    if m == 0:
        return tuple(labels)
    return tuple(labels[-m:]) + tuple(labels[:-m])


def is_de_bruijn(seq: Sequence[int], k: int, n: int) -> Check:
    seq = tuple(seq)
    if len(seq) != k**n:
        return Check(False, f"length {len(seq)} != {k}^{n} = {k**n}")
    bad = [a for a in seq if not (0 <= a < k)]
    if bad:
        return Check(False, f"symbol {bad[0]} outside alphabet 0..{k - 1}")
    doubled = seq + seq[: n - 1]
    counts = Counter(doubled[i : i + n] for i in range(len(seq)))
    dup = [w for w, c in counts.items() if c > 1]
    if dup:
        missing = next(w for w in product(range(k), repeat=n) if w not in counts)
        return Check(
            False,
            f"window {_fmt(dup[0])} occurs {counts[dup[0]]} times; {_fmt(missing)} missing",
        )
    return Check(True)


def _fmt(w: Sequence[int]) -> str:
    return "".join(str(a) if a < 10 else f"<{a}>" for a in w)


def check_size(k: int, n: int, cap: int = DEFAULT_SIZE_CAP) -> None:
    if k**n > cap:
        raise ValueError(f"k^n = {k}^{n} exceeds the size cap {cap}")


def generate_de_bruijn(
    k: int,
    n: int,
    start: Sequence[int] | None = None,
    rng: random.Random | None = None,
    cap: int = DEFAULT_SIZE_CAP,
) -> Word:
    """A de Bruijn sequence of order n over k symbols via Hierholzer's algorithm.

    Without `rng` every vertex tries its unused edges by increasing label, so the
    result is a pure function of (k, n, start). With `rng` each vertex gets its
    own shuffled label order, which is how randomized test inputs are produced.
    The returned linear word begins with `start` (default: m zeros).
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    check_size(k, n, cap)
    params = GraphParams(k, n - 1)
    m, nv = params.m, params.n_vertices
    start = (0,) * m if start is None else tuple(start)
    if len(start) != m or any(not 0 <= a < k for a in start):
        raise ValueError(f"start must be a word of length {m} over 0..{k - 1}")

    if rng is None:
        order = None
    else:
        order = []
        for _ in range(nv):
            labels = list(range(k))
            rng.shuffle(labels)
            order.append(labels)
    nxt = [0] * nv  # per-vertex pointer into its label order

    s = params.encode(start)
    stack = [s]
    labels_stack = [-1]
    circuit = []
    while stack:
        v = stack[-1]
        i = nxt[v]
        if i < k:
            nxt[v] = i + 1
            a = i if order is None else order[v][i]
            stack.append((v * k + a) % nv)
            labels_stack.append(a)
        else:
            stack.pop()
            circuit.append(labels_stack.pop())
    circuit.pop()  # sentinel of the start vertex
    labels = tuple(reversed(circuit))
    return cycle_to_sequence(EulerianCycle(params, start, labels))
