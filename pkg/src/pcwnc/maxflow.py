"""Integral maximum flow by shortest augmenting paths (Edmonds-Karp)."""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Sequence
from dataclasses import dataclass


@dataclass(frozen=True)
class FlowGraph:
    """Directed graph with non-negative integer capacities.

    Parallel edges are allowed; flows are reported per edge, in the order
    the edges were given.
    """

    nodes: tuple[Hashable, ...]
    edges: tuple[tuple[Hashable, Hashable, int], ...]
    source: Hashable = "s"
    sink: Hashable = "t"

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "edges", tuple((u, v, int(c)) for u, v, c in self.edges))
        known = set(self.nodes)
        if len(known) != len(self.nodes):
            raise ValueError("duplicate node")
        for name, node in (("source", self.source), ("sink", self.sink)):
            if node not in known:
                raise ValueError(f"{name} {node!r} is not a node of the graph")
        for u, v, c in self.edges:
            if u not in known or v not in known:
                raise ValueError(f"edge ({u!r}, {v!r}) references an unknown node")
            if c < 0:
                raise ValueError("capacities must be non-negative")
            if v == self.source:
                raise ValueError("edges into the source are not allowed")
            if u == self.sink:
                raise ValueError("edges out of the sink are not allowed")


@dataclass(frozen=True)
class FlowResult:
    value: int
    flows: tuple[int, ...]

    def on(self, graph: FlowGraph, u, v) -> int:
        """Total flow over all edges from `u` to `v`."""
        return sum(f for (a, b, _), f in zip(graph.edges, self.flows) if a == u and b == v)


def max_flow(graph: FlowGraph) -> FlowResult:
    """Maximum s-t flow.  Breadth-first search in adjacency order keeps the
    returned assignment deterministic."""
    s, t = graph.source, graph.sink
    # residual arcs: [head, residual capacity, index of reverse arc]
    arcs: list[list] = []
    adj: dict = {v: [] for v in graph.nodes}
    forward: list[int] = []
    for u, v, c in graph.edges:
        adj[u].append(len(arcs))
        forward.append(len(arcs))
        arcs.append([v, c, len(arcs) + 1])
        adj[v].append(len(arcs))
        arcs.append([u, 0, len(arcs) - 1])

    value = 0
    while True:
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            u = queue.popleft()
            for a in adj[u]:
                head, cap, _ = arcs[a]
                if cap > 0 and head not in parent:
                    parent[head] = a
                    queue.append(head)
        if t not in parent:
            break
        path = []
        v = t
        while parent[v] is not None:
            a = parent[v]
            path.append(a)
            v = arcs[arcs[a][2]][0]
        push = min(arcs[a][1] for a in path)
        for a in path:
            arcs[a][1] -= push
            arcs[arcs[a][2]][1] += push
        value += push

    flows = tuple(c - arcs[a][1] for a, (_, _, c) in zip(forward, graph.edges))
    return FlowResult(value, flows)


def cut_capacity(graph: FlowGraph, source_side: Sequence[Hashable]) -> int:
    side = set(source_side)
    return sum(c for u, v, c in graph.edges if u in side and v not in side)
