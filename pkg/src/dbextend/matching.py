"""Sections of a pointed Eulerian cycle and a perfect section/vertex matching.

The cycle's edges e_1..e_N (N = k^(m+1)) are cut into k^m consecutive blocks
of k edges; block j holds the heads of e_{jk+1}..e_{jk+k}. Each vertex of
G(k, m) is the head of exactly k edges, so the bipartite multigraph between
vertices and sections is k-regular and has a perfect matching. It is found as
a maximum flow of a unit-capacity network with Edmonds-Karp.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import EulerianCycle, GraphParams
from .words import Word


class HallViolation(RuntimeError):
    """The distribution network has no perfect matching. Unreachable for valid cycles."""


@dataclass(frozen=True)
class Sectioning:
    params: GraphParams
    # sections[j] = ((edge_index, head_code), ...), edge indices are 1-based
    sections: tuple[tuple[tuple[int, int], ...], ...]

    def heads(self, j: int) -> list[Word]:
        return [self.params.decode(v) for _, v in self.sections[j]]

    def flat_heads(self) -> list[int]:
        return [v for sec in self.sections for _, v in sec]

    def __len__(self):
        return len(self.sections)


def sections_of(cycle: EulerianCycle) -> Sectioning:
    k = cycle.params.k
    heads = cycle.head_codes()
    secs = tuple(
        tuple((i + 1, heads[i]) for i in range(j, j + k)) for j in range(0, len(heads), k)
    )
    return Sectioning(cycle.params, secs)


@dataclass(frozen=True)
class DistributionGraph:
    params: GraphParams
    # one entry per head occurrence, in edge-index order: (vertex_code, section, edge_index)
    edges: tuple[tuple[int, int, int], ...]

    def vertex_degree(self, v: int) -> int:
        return sum(1 for u, _, _ in self.edges if u == v)

    def section_degree(self, j: int) -> int:
        return sum(1 for _, s, _ in self.edges if s == j)


def build_distribution_graph(sectioning: Sectioning) -> DistributionGraph:
    edges = tuple(
        (v, j, i) for j, sec in enumerate(sectioning.sections) for i, v in sec
    )
    return DistributionGraph(sectioning.params, edges)


@dataclass
class FlowNetwork:
    """Directed network with integer capacities. Arcs are indexed in insertion order."""

    n_nodes: int
    source: int
    sink: int
    tails: list[int] = field(default_factory=list)
    heads: list[int] = field(default_factory=list)
    caps: list[int] = field(default_factory=list)
    # arc index -> (vertex_code, section, edge_index) for occurrence arcs
    occurrence: dict[int, tuple[int, int, int]] = field(default_factory=dict)

    def add_arc(self, u: int, v: int, cap: int = 1) -> int:
        self.tails.append(u)
        self.heads.append(v)
        self.caps.append(cap)
        return len(self.tails) - 1

    @property
    def n_arcs(self) -> int:
        return len(self.tails)


def build_flow_network(dg: DistributionGraph) -> FlowNetwork:
    """source -> vertex -> section -> sink, every arc of capacity 1.

    Node ids: source 0, vertex v at 1+v, section j at 1+K+j, sink 2K+1, K = k^m.
    """
    K = dg.params.n_vertices
    net = FlowNetwork(n_nodes=2 * K + 2, source=0, sink=2 * K + 1)
    for v in range(K):
        net.add_arc(0, 1 + v)
    for occ in dg.edges:
        v, j, _ = occ
        a = net.add_arc(1 + v, 1 + K + j)
        net.occurrence[a] = occ
    for j in range(K):
        net.add_arc(1 + K + j, 2 * K + 1)
    return net


@dataclass(frozen=True)
class FlowResult:
    value: int
    flow: tuple[int, ...]  # per arc
    augmentations: int


def edmonds_karp(net: FlowNetwork) -> FlowResult:
    """Maximum flow by shortest augmenting paths.

    Residual arc 2a is arc a forward, 2a+1 its reverse. BFS scans each node's
    residual arcs in ascending id and stops at the first discovery of the sink,
    so the result is deterministic.
    """
    n, s, t = net.n_nodes, net.source, net.sink
    to = [0] * (2 * net.n_arcs)
    res = [0] * (2 * net.n_arcs)
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, (u, v, c) in enumerate(zip(net.tails, net.heads, net.caps)):
        to[2 * a], res[2 * a] = v, c
        to[2 * a + 1] = u
        adj[u].append(2 * a)
        adj[v].append(2 * a + 1)
    for lst in adj:
        lst.sort()

    value = 0
    rounds = 0
    while True:
        via = [-1] * n
        via[s] = -2
        queue = deque([s])
        found = False
        while queue and not found:
            u = queue.popleft()
            for r in adj[u]:
                if res[r] > 0:
                    v = to[r]
                    if via[v] == -1:
                        via[v] = r
                        if v == t:
                            found = True
                            break
                        queue.append(v)
        if not found:
            break
        # bottleneck, then push
        push = None
        v = t
        while v != s:
            r = via[v]
            push = res[r] if push is None else min(push, res[r])
            v = to[r ^ 1]
        v = t
        while v != s:
            r = via[v]
            res[r] -= push
            res[r ^ 1] += push
            v = to[r ^ 1]
        value += push
        rounds += 1

    flow = tuple(res[2 * a + 1] for a in range(net.n_arcs))
    return FlowResult(value, flow, rounds)


@dataclass(frozen=True)
class MatchingResult:
    params: GraphParams
    # assignment[j] = (vertex_code, edge_index) with edge_index inside section j
    assignment: tuple[tuple[int, int], ...]
    flow_value: int

    def vertex(self, j: int) -> Word:
        return self.params.decode(self.assignment[j][0])

    def edge_index(self, j: int) -> int:
        return self.assignment[j][1]

    def rows(self) -> list[dict]:
        return [
            {"section": j, "vertex": self.vertex(j), "edge_index": i}
            for j, (_, i) in enumerate(self.assignment)
        ]


def perfect_matching(sectioning: Sectioning) -> MatchingResult:
    dg = build_distribution_graph(sectioning)
    net = build_flow_network(dg)
    fr = edmonds_karp(net)
    K = sectioning.params.n_vertices
    if fr.value < K:
        raise HallViolation(f"max flow {fr.value} < {K} sections")
    chosen: list[tuple[int, int] | None] = [None] * K
    for a, (v, j, i) in net.occurrence.items():
        if fr.flow[a]:
            chosen[j] = (v, i)
    return MatchingResult(sectioning.params, tuple(chosen), fr.value)
