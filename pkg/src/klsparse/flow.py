"""Integer maximum flow with min-cut extraction, and feasible circulations.

The max-flow solver is the layered-network blocking-flow method, which is
fast on the unit-ish capacities produced by the orientation reduction (total
capacity O(n)).  Circulations with lower bounds reduce to a single max-flow
instance via the usual super-source/super-sink transformation; infeasibility
is certified by a node set violating the Hoffman condition.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import InputError


@dataclass
class FlowNetwork:
    """Directed network with integer capacities. Parallel arcs stay distinct."""

    num_nodes: int
    arcs: list[tuple[int, int, int]]  # (tail, head, capacity)
    source: int
    sink: int

    def __post_init__(self):
        if self.source == self.sink:
            raise InputError("source and sink must differ")
        for u in (self.source, self.sink):
            if not 0 <= u < self.num_nodes:
                raise InputError(f"terminal {u} out of range")
        for tail, head, cap in self.arcs:
            if not (0 <= tail < self.num_nodes and 0 <= head < self.num_nodes):
                raise InputError(f"arc ({tail}, {head}) out of range")
            if cap < 0:
                raise InputError(f"negative capacity on arc ({tail}, {head})")


@dataclass
class CirculationNetwork:
    """Directed network with per-arc flow bounds 0 <= lower <= upper."""

    num_nodes: int
    arcs: list[tuple[int, int, int, int]]  # (tail, head, lower, upper)

    def __post_init__(self):
        for tail, head, lo, hi in self.arcs:
            if not (0 <= tail < self.num_nodes and 0 <= head < self.num_nodes):
                raise InputError(f"arc ({tail}, {head}) out of range")
            if not 0 <= lo <= hi:
                raise InputError(f"bad bounds [{lo}, {hi}] on arc ({tail}, {head})")


class _Residual:
    """Adjacency-list residual network; arc 2i is forward, 2i+1 its reverse."""

    def __init__(self, n: int):
        self.n = n
        self.to: list[int] = []
        self.cap: list[int] = []
        self.adj: list[list[int]] = [[] for _ in range(n)]

    def add_arc(self, u: int, v: int, c: int) -> int:
        idx = len(self.to)
        self.to.append(v)
        self.cap.append(c)
        self.adj[u].append(idx)
        self.to.append(u)
        self.cap.append(0)
        self.adj[v].append(idx + 1)
        return idx

    def _levels(self, s: int, t: int) -> list[int] | None:
        level = [-1] * self.n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for idx in self.adj[u]:
                v = self.to[idx]
                if self.cap[idx] > 0 and level[v] < 0:
                    level[v] = level[u] + 1
                    queue.append(v)
        return level if level[t] >= 0 else None

    def max_flow(self, s: int, t: int) -> int:
        total = 0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            # Iterative blocking flow: walk a path of admissible arcs,
            # augment on reaching t, prune dead ends from the level graph.
            it = [0] * self.n
            path: list[int] = []
            u = s
            while True:
                if u == t:
                    bottleneck = min(self.cap[idx] for idx in path)
                    for idx in path:
                        self.cap[idx] -= bottleneck
                        self.cap[idx ^ 1] += bottleneck
                    total += bottleneck
                    cut = next(i for i, idx in enumerate(path) if self.cap[idx] == 0)
                    del path[cut:]
                    u = s if not path else self.to[path[-1]]
                    continue
                moved = False
                while it[u] < len(self.adj[u]):
                    idx = self.adj[u][it[u]]
                    v = self.to[idx]
                    if self.cap[idx] > 0 and level[v] == level[u] + 1:
                        path.append(idx)
                        u = v
                        moved = True
                        break
                    it[u] += 1
                if moved:
                    continue
                if u == s:
                    break
                level[u] = -1
                u = self.to[path.pop() ^ 1]

    def reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for idx in self.adj[u]:
                v = self.to[idx]
                if self.cap[idx] > 0 and v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen


def max_flow(net: FlowNetwork) -> tuple[list[int], set[int]]:
    """Maximum integer flow and a minimum cut.

    Returns per-arc flows aligned with ``net.arcs`` and the set of nodes
    reachable from the source in the final residual network; that set
    contains the source, excludes the sink, and its outgoing capacity
    equals the flow value.
    """
    res = _Residual(net.num_nodes)
    handles = [res.add_arc(u, v, c) for u, v, c in net.arcs]
    res.max_flow(net.source, net.sink)
    flows = [net.arcs[i][2] - res.cap[h] for i, h in enumerate(handles)]
    return flows, res.reachable(net.source)


def feasible_circulation(net: CirculationNetwork) -> tuple[list[int] | None, set[int] | None]:
    """Find an integer circulation within bounds, or a Hoffman-violating set.

    Returns ``(circulation, None)`` with exact conservation at every node, or
    ``(None, X)`` where the sum of lower bounds on arcs leaving X exceeds the
    sum of upper bounds on arcs entering X.
    """
    n = net.num_nodes
    source, sink = n, n + 1
    res = _Residual(n + 2)
    handles = []
    excess = [0] * n
    for tail, head, lo, hi in net.arcs:
        handles.append(res.add_arc(tail, head, hi - lo))
        excess[head] += lo
        excess[tail] -= lo
    needed = 0
    for v in range(n):
        if excess[v] > 0:
            res.add_arc(source, v, excess[v])
            needed += excess[v]
        elif excess[v] < 0:
            res.add_arc(v, sink, -excess[v])
    value = res.max_flow(source, sink)
    if value == needed:
        circulation = [lo + (hi - lo) - res.cap[h]
                       for (_, _, lo, hi), h in zip(net.arcs, handles)]
        return circulation, None
    # Hoffman set: the side of the cut that cannot be reached from the
    # super-source, restricted to original nodes.
    reach = res.reachable(source)
    hoffman = {v for v in range(n) if v not in reach}
    return None, hoffman
