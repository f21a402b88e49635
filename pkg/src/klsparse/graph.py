"""Multigraph data model, sparsity parameters, and violation certificates.

Vertices are dense integers ``0..n-1`` and edges carry dense, stable ids:
edge id ``i`` refers to ``edges[i]`` forever.  Loops are stored as ``(v, v)``
and count once toward both induced-edge counts and (when oriented) the
indegree of their vertex.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class InputError(ValueError):
    """Malformed graph data: bad vertex ids, unparsable edge lists."""


class ParameterError(ValueError):
    """Sparsity parameters outside the supported ranges."""


class ContractError(RuntimeError):
    """A documented precondition was violated by the caller."""


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph, immutable after construction."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise InputError("vertex count must be nonnegative")
        normalized = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", normalized)
        for u, v in normalized:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge endpoint out of range: ({u}, {v}) with n={self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Per-vertex degree; a loop adds 1 to its vertex."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            if v != u:
                deg[v] += 1
        return deg

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def has_parallel_edge(self) -> bool:
        seen = set()
        for u, v in self.edges:
            key = (u, v) if u <= v else (v, u)
            if key in seen:
                return True
            seen.add(key)
        return False

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """Per-vertex list of (neighbor, edge id); loops appear once."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            adj[u].append((v, e))
            if v != u:
                adj[v].append((u, e))
        return adj


@dataclass(frozen=True)
class SparsityParams:
    """Parameter pair (k, l) with 0 <= l < 3k, plus the derived range index t.

    t = 0 for l <= k (classical lower range, any multigraph),
    t = 1 for k < l < 2k (classical upper range, loop-free input),
    t = 2 for 2k <= l < 3k (extended range, simple input, and only vertex
    sets of size at least three are constrained).
    """

    k: int
    l: int

    def __post_init__(self):
        if self.k < 1:
            raise ParameterError(f"k must be positive, got {self.k}")
        if not 0 <= self.l < 3 * self.k:
            raise ParameterError(f"l must satisfy 0 <= l < 3k, got (k, l) = ({self.k}, {self.l})")

    @property
    def t(self) -> int:
        if self.l <= self.k:
            return 0
        if self.l < 2 * self.k:
            return 1
        return 2


@dataclass(frozen=True)
class Certificate:
    """A vertex set whose induced edge count exceeds its sparsity bound."""

    vertices: frozenset[int]
    induced_edges: int
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))

    def sorted_vertices(self) -> list[int]:
        return sorted(self.vertices)


def induced_edge_count(g: Graph, x: Iterable[int]) -> int:
    """Number of edges with both endpoints in x; a loop at v in x counts once."""
    xs = set(x)
    for v in xs:
        if not 0 <= v < g.n:
            raise InputError(f"vertex id {v} out of range for n={g.n}")
    return sum(1 for u, v in g.edges if u in xs and v in xs)


def sparsity_bound(p: SparsityParams, size: int) -> int:
    """Right-hand side of the sparsity inequality for a set of the given size.

    Classical ranges clamp at zero; the extended range uses the raw value
    (it only ever applies to sets of size >= 3, where it is nonnegative).
    """
    raw = p.k * size - p.l
    if p.t < 2:
        return max(raw, 0)
    return raw


def validate_input(g: Graph, p: SparsityParams) -> str | None:
    """Return None if the graph is structurally valid for the range, else the reason."""
    if p.t == 1 and g.has_loop():
        return "loops forbidden for k<l<2k"
    if p.t == 2 and (g.has_loop() or g.has_parallel_edge()):
        return "graph must be simple for 2k<=l<3k"
    return None


def verify_certificate(g: Graph, p: SparsityParams, c: Certificate) -> bool:
    """Recompute the violation from scratch, ignoring the certificate's counts."""
    if p.t == 2 and len(c.vertices) < 3:
        return False
    induced = induced_edge_count(g, c.vertices)
    return induced > sparsity_bound(p, len(c.vertices))


def make_certificate(g: Graph, p: SparsityParams, vertices: Iterable[int]) -> Certificate:
    """Materialize a certificate for a known violating set; raises if it does not violate."""
    vs = frozenset(vertices)
    cert = Certificate(vs, induced_edge_count(g, vs), sparsity_bound(p, len(vs)))
    if not verify_certificate(g, p, cert):
        raise ContractError(f"set {sorted(vs)} does not violate ({p.k},{p.l})-sparsity")
    return cert


def parse_edge_list(text: str) -> Graph:
    """Parse the shared edge-list format: "n m" header, then m lines "u v".

    Lines starting with '#' are ignored; blank lines are not allowed.
    """
    lines = [ln for ln in text.splitlines() if not ln.lstrip().startswith("#")]
    if not lines:
        raise InputError("empty edge-list input")
    header = lines[0].split()
    if len(header) != 2:
        raise InputError(f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise InputError(f"non-integer header: {lines[0]!r}") from exc
    if m < 0:
        raise InputError("edge count must be nonnegative")
    if len(lines) != m + 1:
        raise InputError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise InputError(f"expected edge line 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise InputError(f"non-integer edge line: {ln!r}") from exc
    return Graph(n, tuple(edges))


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"
