"""Extend a de Bruijn sequence over k symbols to one over k+1 symbols.

The input is walked as an Eulerian cycle of G(k, m), m = n-1. Each section of
k consecutive edges gets exactly one petal, spliced right after the edge the
matching picked for it. The petals partition the edges of G(k+1, m) that use
the new symbol, so the spliced walk is an Eulerian cycle of G(k+1, m), and
between two petals there are at most 2k-1 input edges.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .graph import (
    EulerianCycle,
    GraphParams,
    NotDeBruijn,
    cycle_to_sequence,
    is_de_bruijn,
    sequence_to_cycle,
)
from .matching import MatchingResult, perfect_matching, sections_of
from .petals import build_petals_tree
from .verifier import verify_extension
from .words import Word

TIE_BREAK = "ek-bfs-ascending-arcs/petals-greedy-colex"


class CoverageGap(RuntimeError):
    """The spliced walk is not a de Bruijn sequence. Unreachable unless the construction is broken."""


@dataclass(frozen=True)
class Insertion:
    section: int
    anchor: Word
    position: int  # index in the output of the petal's first symbol
    petal_len: int


@dataclass(frozen=True)
class ExtensionResult:
    k: int
    n: int
    start: Word
    input: Word  # linear representative of v beginning at `start`
    output: Word
    embedding: tuple[int, ...]
    insertions: tuple[Insertion, ...]
    matching: MatchingResult
    tie_break: str = TIE_BREAK

    @property
    def s(self) -> int:
        return self.k

    @property
    def window_bound(self) -> int:
        return self.n + 2 * self.k - 1

    def petal_positions(self) -> set[int]:
        N = len(self.output)
        return {
            (ins.position + t) % N for ins in self.insertions for t in range(ins.petal_len)
        }


def rotate_to_start(v: Sequence[int], start: Sequence[int]) -> Word:
    """Rotate v so it begins at the first occurrence of the window `start`."""
    v, start = tuple(v), tuple(start)
    m = len(start)
    if m == 0:
        return v
    doubled = v + v[: m - 1]
    for i in range(len(v)):
        if doubled[i : i + m] == start:
            return v[i:] + v[:i]
    raise ValueError(f"start {start} is not a window of the input")


def extend(
    v: Sequence[int], k: int, n: int, start: Sequence[int] | None = None
) -> ExtensionResult:
    if n < 1:
        raise ValueError("order must be >= 1")
    chk = is_de_bruijn(v, k, n)
    if not chk:
        raise NotDeBruijn(chk.detail)
    m = n - 1
    v = tuple(v)
    if start is not None:
        if len(start) != m:
            raise ValueError(f"start must have length {m}")
        v = rotate_to_start(v, start)
    params = GraphParams(k, m)
    cycle = sequence_to_cycle(v, params)
    sectioning = sections_of(cycle)
    matching = perfect_matching(sectioning)
    tree = build_petals_tree(k, m)

    # splice points: edge index (1-based) -> section
    splice = {i: j for j, (_, i) in enumerate(matching.assignment)}
    out: list[int] = []
    kept: list[int] = []  # walk index of each input label
    walk_starts: list[tuple[int, Word, int]] = []
    for idx, a in enumerate(cycle.labels, start=1):
        kept.append(len(out))
        out.append(a)
        j = splice.get(idx)
        if j is not None:
            anchor = matching.vertex(j)
            petal = tree.petal(anchor)
            walk_starts.append((j, anchor, len(out)))
            out.extend(petal.labels)

    N = len(out)
    ext = EulerianCycle(GraphParams(k + 1, m), cycle.start_vertex, tuple(out))
    w = cycle_to_sequence(ext)
    # linear output = walk labels rotated right by m
    embedding = tuple(range(m)) + tuple(kept[i] + m for i in range(len(v) - m))
    insertions = tuple(
        Insertion(j, anchor, (p + m) % N, len(tree.petal(anchor)))
        for j, anchor, p in sorted(walk_starts)
    )
    result = ExtensionResult(k, n, cycle.start_vertex, v, w, embedding, insertions, matching)

    report = verify_extension(v, w, k, n, witness=embedding)
    if not report.passed:
        raise CoverageGap(report.summary())
    return result


def insertion_trace(result: ExtensionResult) -> list[str]:
    """One line per emitted edge plus an enter and an exit line per petal, in walk order."""
    m = result.n - 1
    w = result.output
    N = len(w)
    walk = w[m:] + w[:m]  # labels in walk order from the start vertex
    enter = {(ins.position - m) % N: ins for ins in result.insertions}
    in_petal = [False] * N
    for p, ins in enter.items():
        in_petal[p : p + ins.petal_len] = [True] * ins.petal_len

    lines = []
    vertex = result.start
    exit_at: dict[int, Insertion] = {}
    for t in range(N + 1):
        ins = exit_at.pop(t, None)
        if ins is not None:
            lines.append(f"exit petal {_word(ins.anchor)} (section {ins.section})")
        if t == N:
            break
        ins = enter.get(t)
        if ins is not None:
            lines.append(
                f"enter petal {_word(ins.anchor)} (section {ins.section}, "
                f"after edge {result.matching.edge_index(ins.section)}, {ins.petal_len} edges)"
            )
            exit_at[t + ins.petal_len] = ins
        edge = vertex + (walk[t],)
        lines.append(f"{t + 1:>6} {'petal' if in_petal[t] else 'input'} {_word(edge)}")
        vertex = edge[1:]
    return lines


def _word(w: Sequence[int]) -> str:
    return "".join(str(a) if a < 10 else chr(ord("a") + a - 10) for a in w) or "ε"
