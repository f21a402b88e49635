"""Bounded-indegree orientations and augmenting-path reorientation.

An orientation with all indegrees at most kappa exists iff no vertex set X
induces more than kappa*|X| edges; the search is encoded as a feasible
circulation over reversal indicators and solved by one max-flow call.  An
infeasible instance yields a Hoffman-violating set, which is exactly such
an X.  Reorientation toward a prescribed zero-indegree set uses path
reversals; when it stalls, the set of vertices that still reach the target
certifies the obstruction.
"""
from __future__ import annotations

from collections import deque
from typing import TYPE_CHECKING, Iterable

from .flow import CirculationNetwork, feasible_circulation
from .graph import Certificate, ContractError, Graph, induced_edge_count

if TYPE_CHECKING:
    from .forests import ForestDecomposition


class Orientation:
    """Per-edge directions over a Graph, with cached indegrees.

    The direction bit of edge ``(u, v)`` is False for ``u -> v`` and True for
    ``v -> u``.  Loops always contribute 1 to their vertex's indegree and
    reversing them is a no-op.
    """

    __slots__ = ("graph", "rev", "indeg")

    def __init__(self, graph: Graph, rev: list[bool] | None = None):
        self.graph = graph
        self.rev = [False] * graph.m if rev is None else list(rev)
        if len(self.rev) != graph.m:
            raise ContractError("direction vector length must equal edge count")
        indeg = [0] * graph.n
        for e, (u, v) in enumerate(graph.edges):
            indeg[u if self.rev[e] and u != v else v] += 1
        self.indeg = indeg

    def head(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return u if self.rev[e] and u != v else v

    def tail(self, e: int) -> int:
        u, v = self.graph.edges[e]
        return v if self.rev[e] and u != v else u

    def reverse(self, e: int) -> None:
        u, v = self.graph.edges[e]
        if u == v:
            return
        old_head = self.head(e)
        self.rev[e] = not self.rev[e]
        self.indeg[old_head] -= 1
        self.indeg[self.head(e)] += 1

    def copy(self) -> "Orientation":
        return Orientation(self.graph, self.rev)

    def out_adjacency(self) -> list[list[int]]:
        """Edge ids grouped by current tail, in edge-id order."""
        out: list[list[int]] = [[] for _ in range(self.graph.n)]
        for e in range(self.graph.m):
            out[self.tail(e)].append(e)
        return out

    def in_adjacency(self) -> list[list[int]]:
        inc: list[list[int]] = [[] for _ in range(self.graph.n)]
        for e in range(self.graph.m):
            inc[self.head(e)].append(e)
        return inc

    def max_indegree(self) -> int:
        return max(self.indeg, default=0)


def bounded_orientation(g: Graph, kappa: int) -> tuple[Certificate | None, Orientation | None]:
    """Orient all edges with every indegree <= kappa, or certify impossibility.

    Returns ``(None, orientation)`` on success, else ``(certificate, None)``
    where the certificate set X satisfies i_G(X) > kappa*|X|.

    Starting from the input direction of every edge, a reversal vector is
    sought subject to, at each vertex u, a net reversal balance of at least
    ``indeg(u) - kappa``.  This is a circulation instance on the arcs plus
    one collector node; negative lower bounds on the collector arcs are
    split into a forward arc clamped at zero and a reverse arc carrying the
    slack, which leaves feasibility and the violating-set map unchanged.
    """
    if kappa < 1:
        raise ContractError("kappa must be positive")
    n = g.n
    collector = n
    deg = g.degrees()
    d = Orientation(g)
    arcs: list[tuple[int, int, int, int]] = [(u, v, 0, 1) for u, v in g.edges]
    for u in range(n):
        b = d.indeg[u] - kappa
        arcs.append((u, collector, max(b, 0), deg[u]))
        if b < 0:
            arcs.append((collector, u, 0, -b))
    circulation, hoffman = feasible_circulation(CirculationNetwork(n + 1, arcs))
    if circulation is None:
        assert hoffman is not None and collector not in hoffman and hoffman
        induced = induced_edge_count(g, hoffman)
        assert induced > kappa * len(hoffman)
        return Certificate(frozenset(hoffman), induced, kappa * len(hoffman)), None
    for e in range(g.m):
        if circulation[e]:
            d.reverse(e)
    assert d.max_indegree() <= kappa
    return None, d


def reorient_to_source(d: Orientation, k: int, u0: Iterable[int]) -> tuple[Certificate | None, Orientation | None]:
    """Reorient so every vertex of u0 has indegree 0, keeping indegrees <= k.

    Returns ``(None, d0)`` on success (the input orientation is not
    mutated), or ``(certificate, None)`` where the certificate set T
    strictly contains u0 and satisfies i_G(T) > k|T| - |u0|*k.

    Each iteration finds a directed path from a vertex with spare indegree
    capacity to u0 (breadth-first from all such vertices at once) and
    reverses it, which lowers the indegree sum on u0 by exactly one.
    """
    g = d.graph
    u0 = frozenset(u0)
    for v in u0:
        if not 0 <= v < g.n:
            raise ContractError(f"u0 vertex {v} out of range")
    if d.max_indegree() > k:
        raise ContractError("orientation is not k-indegree-bounded")
    for u, v in g.edges:
        if u in u0 and v in u0:
            raise ContractError("u0 must be independent in the underlying graph")
    d0 = d.copy()
    t = len(u0)
    while any(d0.indeg[v] > 0 for v in u0):
        out = d0.out_adjacency()
        parent_arc: dict[int, int] = {}
        sources = sorted(v for v in range(g.n) if v not in u0 and d0.indeg[v] < k)
        queue = deque(sources)
        seen = set(sources)
        hit = None
        while queue:
            u = queue.popleft()
            if u in u0:
                hit = u
                break
            for e in out[u]:
                w = d0.head(e)
                if w not in seen:
                    seen.add(w)
                    parent_arc[w] = e
                    queue.append(w)
        if hit is None:
            target = _backward_closure(d0, u0)
            assert u0 < target
            induced = induced_edge_count(g, target)
            bound = k * len(target) - t * k
            assert induced > bound
            return Certificate(frozenset(target), induced, bound), None
        node = hit
        while node in parent_arc:
            e = parent_arc[node]
            node = d0.tail(e)
            d0.reverse(e)
    return None, d0


def _backward_closure(d: Orientation, targets: frozenset[int]) -> set[int]:
    """All vertices from which some target is reachable along arcs."""
    inc = d.in_adjacency()
    seen = set(targets)
    queue = deque(targets)
    while queue:
        v = queue.popleft()
        for e in inc[v]:
            u = d.tail(e)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return seen


def orient_from_forests(fd: "ForestDecomposition") -> Orientation:
    """Root every tree of every forest class and orient parent to child.

    Each vertex gains at most one incoming arc per class, so the result is
    kappa-indegree-bounded.  Roots are the lowest vertex id of each tree.
    """
    g = fd.graph
    rev = [False] * g.m
    for i in range(fd.kappa):
        adj: dict[int, list[tuple[int, int]]] = {}
        for e in fd.class_edges(i):
            u, v = g.edges[e]
            adj.setdefault(u, []).append((v, e))
            adj.setdefault(v, []).append((u, e))
        visited: set[int] = set()
        for root in sorted(adj):
            if root in visited:
                continue
            visited.add(root)
            queue = deque([root])
            while queue:
                u = queue.popleft()
                for w, e in adj[u]:
                    if w in visited:
                        continue
                    visited.add(w)
                    # orient u -> w: head must be the child w
                    rev[e] = g.edges[e][1] != w
                    queue.append(w)
    d = Orientation(g, rev)
    if d.max_indegree() > fd.kappa:
        raise ContractError("forest classes do not form forests")
    return d
