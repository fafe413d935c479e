"""Minimum-weight vertex cover on bipartite graphs via max-flow.

The cover instance is given as vertex weights plus an edge list.  A
2-coloring found by BFS (vertices scanned in sorted order, so the
coloring and therefore the chosen cover are deterministic) splits the
graph into left/right sides; the classic cut network then yields the
optimum: source->left with capacity w, right->sink with capacity w,
left->right uncuttable.  The cover is read off the residual reachability
of the final flow.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import OddCycle

Node = object  # vertex ids plus two per-call sentinel objects


@dataclass
class FlowNetwork:
    source: Node
    sink: Node
    graph: dict = field(default_factory=dict)  # node -> arc indices
    arcs: list = field(default_factory=list)  # arc i = [head, residual cap]; i^1 reverses it

    def add_arc(self, u: Node, v: Node, cap: int) -> None:
        self.graph.setdefault(u, []).append(len(self.arcs))
        self.arcs.append([v, cap])
        self.graph.setdefault(v, []).append(len(self.arcs))
        self.arcs.append([u, 0])


@dataclass(frozen=True)
class VertexCoverSolution:
    chosen: tuple[int, ...]
    weight: int


def check_bipartition(weights: dict[int, int], edges) -> tuple[frozenset, frozenset]:
    """2-color the graph, vertices seeded in sorted order; OddCycle if impossible."""
    adj: dict[int, list[int]] = {v: [] for v in weights}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    color: dict[int, int] = {}
    for seed in sorted(weights):
        if seed in color:
            continue
        color[seed] = 0
        queue = deque([seed])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in color:
                    color[v] = color[u] ^ 1
                    queue.append(v)
                elif color[v] == color[u]:
                    raise OddCycle(f"edge {u}-{v} joins two vertices on the same side")
    left = frozenset(v for v, c in color.items() if c == 0)
    right = frozenset(v for v, c in color.items() if c == 1)
    return left, right


def max_flow(net: FlowNetwork) -> tuple[int, frozenset]:
    """Dinic blocking-flow loop; returns (flow value, source side of the min cut)."""
    total = 0
    bound = sum(net.arcs[i][1] for i in net.graph.get(net.source, ())) + 1
    while True:
        level = {net.source: 0}
        queue = deque([net.source])
        while queue:
            u = queue.popleft()
            for i in net.graph.get(u, ()):
                head, cap = net.arcs[i]
                if cap > 0 and head not in level:
                    level[head] = level[u] + 1
                    queue.append(head)
        if net.sink not in level:
            return total, frozenset(level)
        it = {u: 0 for u in net.graph}

        def dfs(u: Node, pushed: int) -> int:
            if u == net.sink:
                return pushed
            arcs_here = net.graph[u]
            while it[u] < len(arcs_here):
                i = arcs_here[it[u]]
                head, cap = net.arcs[i]
                if cap > 0 and level.get(head) == level[u] + 1:
                    got = dfs(head, min(pushed, cap))
                    if got > 0:
                        net.arcs[i][1] -= got
                        net.arcs[i ^ 1][1] += got
                        return got
                it[u] += 1
            return 0

        while True:
            pushed = dfs(net.source, bound)
            if pushed == 0:
                break
            total += pushed


def min_weight_vertex_cover(weights: dict[int, int], edges) -> VertexCoverSolution:
    left, right = check_bipartition(weights, edges)
    source, sink = object(), object()
    net = FlowNetwork(source, sink)
    inf = sum(weights.values()) + 1
    for u in sorted(left):
        net.add_arc(source, u, weights[u])
    for v in sorted(right):
        net.add_arc(v, sink, weights[v])
    for u, v in sorted(edges):
        if u in right:
            u, v = v, u
        net.add_arc(u, v, inf)
    value, source_side = max_flow(net)
    touched = {u for e in edges for u in e}
    chosen = sorted(
        v
        for v in touched
        if (v in left and v not in source_side) or (v in right and v in source_side)
    )
    assert sum(weights[v] for v in chosen) == value
    return VertexCoverSolution(tuple(chosen), value)
