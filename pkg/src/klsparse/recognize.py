"""Recognition of (k,l)-sparse graphs with violating-set certificates.

The central reduction: given a k-indegree-bounded orientation whose
prescribed independent set u0 (|u0| = t) has all indegrees zero, a strict
superset of u0 violating (k,l)-sparsity exists iff, after deleting u0,
adding a root s, and wiring k - indeg(v) parallel arcs from s to every
remaining vertex, some vertex set avoiding s has fewer than l - t*k
entering arcs.  The three range drivers differ in how they produce the
orientations and which u0 they probe:

* l <= k: one bounded orientation, probe u0 = {} with eta = l.
* k < l < 2k: decompose into k forests, orient away from tree roots, and
  for each component of the first l - k forests recurse by centroid
  decomposition, probing u0 = {centroid} at every level.
* 2k <= l < 3k: insert edges one at a time, probing u0 = {u, v} against
  (k, l+1) before accepting each edge uv.
"""
from __future__ import annotations

import json
import logging
from collections import deque
from dataclasses import dataclass

from .forests import ForestDecomposition, forest_decomposition
from .graph import (
    Certificate,
    ContractError,
    Graph,
    InputError,
    SparsityParams,
    induced_edge_count,
    make_certificate,
    validate_input,
)
from .orient import Orientation, bounded_orientation, orient_from_forests, reorient_to_source
from .rooted import RootedDigraph, rooted_violation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecognitionResult:
    sparse: bool
    certificate: Certificate | None

    def __post_init__(self):
        if self.sparse == (self.certificate is not None):
            raise ContractError("certificate present iff not sparse")


def _superset_violation(d0: Orientation, u0: frozenset[int], k: int, l: int) -> set[int] | None:
    """Violating strict superset of u0, via the rooted-connectivity reduction.

    Assumes d0 is k-indegree-bounded and u0-source with t*k <= l <= (t+1)*k.
    Returns the violating vertex set (u0 included) or None.
    """
    g = d0.graph
    t = len(u0)
    eta = l - t * k
    keep = [v for v in range(g.n) if v not in u0]
    sub = {v: i for i, v in enumerate(keep)}
    root = len(keep)
    arcs: list[tuple[int, int, int]] = []
    for e in range(g.m):
        tl, hd = d0.tail(e), d0.head(e)
        if tl == hd:
            continue
        if tl in u0:
            continue  # deleted together with u0
        assert hd not in u0, "orientation is not u0-source"
        arcs.append((sub[tl], sub[hd], 1))
    for v in keep:
        mult = k - d0.indeg[v]
        if mult > 0:
            arcs.append((root, sub[v], mult))
    found = rooted_violation(RootedDigraph(root + 1, arcs, root), eta)
    if not found:
        return None
    return {keep[x] for x in found} | set(u0)


def check_superset_sparsity(d0: Orientation, u0, k: int, l: int) -> Certificate | None:
    """Find a set strictly containing u0 that violates (k,l)-sparsity, if any.

    ``l`` may reach 3k here (the extended-range driver probes l+1), so the
    certificate bound is computed directly rather than through
    SparsityParams.
    """
    u0 = frozenset(u0)
    g = d0.graph
    t = len(u0)
    if not t * k <= l <= (t + 1) * k:
        raise ContractError(f"need {t}k <= l <= {t + 1}k, got k={k}, l={l}")
    if d0.max_indegree() > k:
        raise ContractError("orientation is not k-indegree-bounded")
    for v in u0:
        if not 0 <= v < g.n:
            raise ContractError(f"u0 vertex {v} out of range")
        if d0.indeg[v] != 0:
            raise ContractError("orientation is not u0-source")
    for u, v in g.edges:
        if u in u0 and v in u0:
            raise ContractError("u0 must be independent")
    found = _superset_violation(d0, u0, k, l)
    if found is None:
        return None
    raw = k * len(found) - l
    bound = raw if t == 2 else max(raw, 0)
    induced = induced_edge_count(g, found)
    assert induced > bound
    return Certificate(frozenset(found), induced, bound)


def check_sparsity_low(g: Graph, p: SparsityParams) -> RecognitionResult:
    """Range l <= k: bounded orientation, then one rooted-connectivity query."""
    if p.t != 0:
        raise ContractError("check_sparsity_low requires l <= k")
    cert, d = bounded_orientation(g, p.k)
    if cert is not None:
        return RecognitionResult(False, make_certificate(g, p, cert.vertices))
    found = _superset_violation(d, frozenset(), p.k, p.l)
    if found is not None:
        return RecognitionResult(False, make_certificate(g, p, found))
    return RecognitionResult(True, None)


def _centroid(tree_adj: list[list[int]]) -> int:
    """Vertex whose removal leaves components of at most half the vertices.

    Ties break toward the lowest vertex id.
    """
    n = len(tree_adj)
    if n == 1:
        return 0
    order = []
    parent = [-1] * n
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        v = stack.pop()
        order.append(v)
        for w in tree_adj[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                stack.append(w)
    size = [1] * n
    heaviest = [0] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
            heaviest[parent[v]] = max(heaviest[parent[v]], size[v])
    best = None
    for v in range(n):
        top = max(heaviest[v], n - size[v])
        if top <= n // 2 and best is None:
            best = v
    assert best is not None
    return best


def _tree_components(tree_adj: list[list[int]], c: int) -> list[list[int]]:
    """Sorted vertex lists of the components of the tree minus vertex c."""
    comps = []
    seen = {c}
    for start in tree_adj[c]:
        if start in seen:
            continue
        seen.add(start)
        comp = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in tree_adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def _induce_orientation(
    d: Orientation, inc: list[list[int]], comp: list[int]
) -> tuple[Orientation, dict[int, int]]:
    """Sub-orientation on comp: keep arcs whose tail also lies in comp."""
    idx = {v: i for i, v in enumerate(comp)}
    edges = []
    for v in comp:
        for e in inc[v]:
            tl = d.tail(e)
            if tl in idx:
                edges.append((idx[tl], idx[v]))
    return Orientation(Graph(len(comp), tuple(edges))), idx


def _saturated_worker(
    d: Orientation, tree_adj: list[list[int]], labels: list[int], k: int, l: int
) -> set[int] | None:
    c = _centroid(tree_adj)
    cert, d0 = reorient_to_source(d, k, (c,))
    if cert is not None:
        return {labels[v] for v in cert.vertices}
    found = _superset_violation(d0, frozenset((c,)), k, l)
    if found is not None:
        return {labels[v] for v in found}
    inc = d.in_adjacency()
    for comp in _tree_components(tree_adj, c):
        sub_d, idx = _induce_orientation(d, inc, comp)
        sub_tree = [[idx[w] for w in tree_adj[v] if w in idx] for v in comp]
        result = _saturated_worker(sub_d, sub_tree, [labels[v] for v in comp], k, l)
        if result is not None:
            return result
    return None


def saturated_violation(d: Orientation, tree_edges, p: SparsityParams) -> Certificate | None:
    """Centroid-decomposition search for a violating set saturated by a tree.

    Returns a violating set whenever the underlying graph contains one on
    which the given spanning tree induces a connected subgraph; may return
    None or any valid violating set otherwise.
    """
    if p.t != 1:
        raise ContractError("saturated_violation requires k < l < 2k")
    g = d.graph
    tree_edges = list(tree_edges)
    if len(tree_edges) != g.n - 1:
        raise ContractError("tree must span the orientation's vertex set")
    tree_adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in tree_edges:
        tree_adj[u].append(v)
        tree_adj[v].append(u)
    reached = {0} if g.n else set()
    queue = deque(reached)
    while queue:
        u = queue.popleft()
        for w in tree_adj[u]:
            if w not in reached:
                reached.add(w)
                queue.append(w)
    if len(reached) != g.n:
        raise ContractError("tree must span the orientation's vertex set")
    found = _saturated_worker(d, tree_adj, list(range(g.n)), p.k, p.l)
    if found is None:
        return None
    return make_certificate(g, p, found)


def check_sparsity_mid(g: Graph, p: SparsityParams) -> RecognitionResult:
    """Range k < l < 2k: forest decomposition plus centroid decomposition."""
    if p.t != 1:
        raise ContractError("check_sparsity_mid requires k < l < 2k")
    reason = validate_input(g, p)
    if reason is not None:
        raise InputError(reason)
    cert, fd = forest_decomposition(g, p.k)
    if cert is not None:
        return RecognitionResult(False, make_certificate(g, p, cert.vertices))
    d = orient_from_forests(fd)
    inc = d.in_adjacency()
    for i in range(p.l - p.k):
        class_adj: list[list[int]] = [[] for _ in range(g.n)]
        for e in fd.class_edges(i):
            u, v = g.edges[e]
            class_adj[u].append(v)
            class_adj[v].append(u)
        for comp in fd.components(i):
            sub_d, idx = _induce_orientation(d, inc, comp)
            sub_tree = [[idx[w] for w in class_adj[v]] for v in comp]
            found = _saturated_worker(sub_d, sub_tree, comp, p.k, p.l)
            if found is not None:
                return RecognitionResult(False, make_certificate(g, p, found))
    return RecognitionResult(True, None)


def check_sparsity_high(g: Graph, p: SparsityParams) -> RecognitionResult:
    """Range 2k <= l < 3k: incremental insertion over a growing sparse subgraph.

    Edge uv is insertable iff the current subgraph has no set strictly
    containing {u, v} violating (k, l+1)-sparsity; a found set certifies
    that the input graph violates (k, l).
    """
    if p.t != 2:
        raise ContractError("check_sparsity_high requires 2k <= l < 3k")
    reason = validate_input(g, p)
    if reason is not None:
        raise InputError(reason)
    d = Orientation(Graph(g.n, ()))
    for u, v in g.edges:
        cert, d2 = reorient_to_source(d, p.k, (u, v))
        assert cert is None, "accepted subgraph lost (k,2k)-sparsity"
        found = _superset_violation(d2, frozenset((u, v)), p.k, p.l + 1)
        if found is not None:
            return RecognitionResult(False, make_certificate(g, p, found))
        d = Orientation(Graph(g.n, d2.graph.edges + ((u, v),)), d2.rev + [False])
    return RecognitionResult(True, None)


def check_sparsity(g: Graph, k: int, l: int) -> RecognitionResult:
    """Decide (k,l)-sparsity for any 0 <= l < 3k, with a certificate on failure.

    Graphs with more than k*n edges are rejected immediately with the full
    vertex set (vacuously sparse instead when the extended range has fewer
    than three vertices).  Structural validation failures raise InputError.
    """
    p = SparsityParams(k, l)
    reason = validate_input(g, p)
    if reason is not None:
        raise InputError(reason)
    if g.m > k * g.n:
        if p.t == 2 and g.n < 3:
            return RecognitionResult(True, None)
        logger.debug("short-circuit: m=%d > k*n=%d", g.m, k * g.n)
        return RecognitionResult(False, make_certificate(g, p, range(g.n)))
    if p.t == 0:
        result = check_sparsity_low(g, p)
    elif p.t == 1:
        result = check_sparsity_mid(g, p)
    else:
        result = check_sparsity_high(g, p)
    logger.debug("check_sparsity(k=%d, l=%d, n=%d, m=%d) -> sparse=%s",
                 k, l, g.n, g.m, result.sparse)
    return result


def certificate_json(p: SparsityParams, cert: Certificate) -> str:
    return json.dumps({
        "k": p.k,
        "l": p.l,
        "sparse": False,
        "violating_set": cert.sorted_vertices(),
        "induced_edges": cert.induced_edges,
        "bound": cert.bound,
    })
