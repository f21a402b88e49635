"""Rooted arc-connectivity: find a vertex set with fewer than eta entering arcs.

A digraph is rooted eta-arc-connected from s when every nonempty vertex set
avoiding s has at least eta entering arcs (counting multiplicities).  For
eta = 1 a single reachability search settles it; for eta >= 2 we run, for
each sink in increasing id order, at most eta rounds of augmenting-path
search on the capacitated arc network and return the residual-unreachable
side at the first sink with fewer than eta arc-disjoint paths.  No
minimality of the returned set is guaranteed.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import InputError


@dataclass
class RootedDigraph:
    """Digraph with a distinguished root; parallel arcs are multiplicities."""

    num_nodes: int
    arcs: list[tuple[int, int, int]]  # (tail, head, multiplicity)
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.num_nodes:
            raise InputError(f"root {self.root} out of range")
        for tail, head, mult in self.arcs:
            if not (0 <= tail < self.num_nodes and 0 <= head < self.num_nodes):
                raise InputError(f"arc ({tail}, {head}) out of range")
            if mult < 0:
                raise InputError("arc multiplicity must be nonnegative")


def _reachable(d: RootedDigraph) -> set[int]:
    adj: list[list[int]] = [[] for _ in range(d.num_nodes)]
    for tail, head, mult in d.arcs:
        if mult > 0:
            adj[tail].append(head)
    seen = {d.root}
    queue = deque([d.root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def rooted_violation(d: RootedDigraph, eta: int) -> set[int]:
    """Return a nonempty X avoiding the root with indegree < eta, or an empty set.

    Deterministic: among eta >= 2 sinks, the lowest-id failing sink wins.
    """
    if eta < 0:
        raise InputError("eta must be nonnegative")
    if eta == 0:
        return set()
    reach = _reachable(d)
    if eta == 1:
        if len(reach) == d.num_nodes:
            return set()
        return set(range(d.num_nodes)) - reach
    n = d.num_nodes
    arc_tail = [a[0] for a in d.arcs]
    arc_head = [a[1] for a in d.arcs]
    arc_mult = [a[2] for a in d.arcs]
    out_arcs: list[list[int]] = [[] for _ in range(n)]
    in_arcs: list[list[int]] = [[] for _ in range(n)]
    for i in range(len(d.arcs)):
        out_arcs[arc_tail[i]].append(i)
        in_arcs[arc_head[i]].append(i)
    for sink in range(n):
        if sink == d.root:
            continue
        flow = [0] * len(d.arcs)
        found = 0
        while found < eta:
            parent: dict[int, tuple[int, bool]] = {}  # node -> (arc, used_forward)
            seen = {d.root}
            queue = deque([d.root])
            while queue and sink not in seen:
                u = queue.popleft()
                for i in out_arcs[u]:
                    v = arc_head[i]
                    if v not in seen and flow[i] < arc_mult[i]:
                        seen.add(v)
                        parent[v] = (i, True)
                        queue.append(v)
                for i in in_arcs[u]:
                    v = arc_tail[i]
                    if v not in seen and flow[i] > 0:
                        seen.add(v)
                        parent[v] = (i, False)
                        queue.append(v)
            if sink not in seen:
                return set(range(n)) - seen
            node = sink
            while node != d.root:
                i, forward = parent[node]
                flow[i] += 1 if forward else -1
                node = arc_tail[i] if forward else arc_head[i]
            found += 1
    return set()
