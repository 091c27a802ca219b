"""Integral flows on small networks (Dinic's algorithm).

Arcs keep their insertion order everywhere, so results are deterministic
for a fixed construction order.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field


@dataclass
class FlowNetwork:
    num_nodes: int
    source: int
    sink: int
    arcs: list[tuple[int, int, int, int]] = field(default_factory=list)  # (u, v, low, cap)

    def add_node(self) -> int:
        self.num_nodes += 1
        return self.num_nodes - 1

    def add_arc(self, u: int, v: int, cap: int, low: int = 0) -> int:
        if not 0 <= low <= cap:
            raise ValueError(f"arc {u}->{v}: need 0 <= low <= cap, got low={low}, cap={cap}")
        if u == v:
            raise ValueError("self-loop")
        self.arcs.append((u, v, low, cap))
        return len(self.arcs) - 1


@dataclass(frozen=True)
class Flow:
    value: int
    arc_flow: tuple[int, ...]


def _dinic(num_nodes: int, edges: list[tuple[int, int, int]], s: int, t: int) -> tuple[int, list[int]]:
    to: list[int] = []
    cap: list[int] = []
    adj: list[list[int]] = [[] for _ in range(num_nodes)]
    for u, v, c in edges:
        adj[u].append(len(to))
        to.append(v)
        cap.append(c)
        adj[v].append(len(to))
        to.append(u)
        cap.append(0)

    value = 0
    while True:
        level = [-1] * num_nodes
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in adj[u]:
                if cap[a] > 0 and level[to[a]] < 0:
                    level[to[a]] = level[u] + 1
                    queue.append(to[a])
        if level[t] < 0:
            break
        it = [0] * num_nodes
        while True:
            # one augmenting path in the level graph, iteratively
            stack: list[int] = []
            u = s
            while u != t:
                arcs = adj[u]
                i = it[u]
                while i < len(arcs):
                    a = arcs[i]
                    if cap[a] > 0 and level[to[a]] == level[u] + 1:
                        break
                    i += 1
                it[u] = i
                if i == len(arcs):
                    level[u] = -1
                    if not stack:
                        break
                    a = stack.pop()
                    u = to[a ^ 1]
                    it[u] += 1
                    continue
                stack.append(arcs[i])
                u = to[arcs[i]]
            if u != t:
                break
            f = min(cap[a] for a in stack)
            for a in stack:
                cap[a] -= f
                cap[a ^ 1] += f
            value += f

    flows = [edges[i][2] - cap[2 * i] for i in range(len(edges))]
    return value, flows


def max_flow(net: FlowNetwork) -> Flow:
    """Maximum integral source-sink flow.  Lower bounds must be zero; use
    :func:`feasible_flow` otherwise."""
    if any(low for _, _, low, _ in net.arcs):
        raise ValueError("max_flow does not handle lower bounds")
    value, flows = _dinic(net.num_nodes, [(u, v, c) for u, v, _, c in net.arcs], net.source, net.sink)
    return Flow(value, tuple(flows))


def feasible_flow(net: FlowNetwork) -> Flow | None:
    """Some integral source-sink flow with low <= flow <= cap on every arc,
    or None if none exists.

    Standard reduction: shift each lower bound into node excesses, join source
    and sink by uncapacitated arcs both ways, and saturate the excesses from
    a super source to a super sink.  Only inner nodes must conserve flow, so
    the net value may come out negative.
    """
    n = net.num_nodes
    excess = [0] * n
    edges = []
    for u, v, low, c in net.arcs:
        edges.append((u, v, c - low))
        excess[v] += low
        excess[u] -= low
    big = sum(c for _, _, _, c in net.arcs) + 1
    edges.append((net.sink, net.source, big))
    edges.append((net.source, net.sink, big))
    super_s, super_t = n, n + 1
    need = 0
    for x in range(n):
        if excess[x] > 0:
            edges.append((super_s, x, excess[x]))
            need += excess[x]
        elif excess[x] < 0:
            edges.append((x, super_t, -excess[x]))
    got, flows = _dinic(n + 2, edges, super_s, super_t)
    if got < need:
        return None
    arc_flow = tuple(low + f for (_, _, low, _), f in zip(net.arcs, flows))
    return Flow(net_outflow(net, arc_flow, net.source), arc_flow)


def net_outflow(net: FlowNetwork, arc_flow, node: int) -> int:
    out = 0
    for (u, v, _, _), f in zip(net.arcs, arc_flow):
        if u == node:
            out += f
        if v == node:
            out -= f
    return out
