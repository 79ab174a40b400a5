"""Simple undirected graphs with dense integer vertices.

Vertices are always 0..n-1.  Adjacency is stored as sorted tuples, all
iteration orders are deterministic, and graphs are immutable after
construction; transforms return new graphs together with vertex maps.
Named constructions (Sierpinski digit strings, reduction gadget names)
carry a separate label map.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Mapping

VertexSet = frozenset  # subsets of 0..n-1, interpreted against a graph


class GraphError(ValueError):
    """Raised for malformed graph input (bad endpoint, self-loop, ...)."""


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "_adj", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Mapping[int, str] | None = None):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop ({u}, {v}) is not allowed")
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)
        self.labels: dict[int, str] = dict(labels) if labels else {}
        for v in self.labels:
            if not (0 <= v < n):
                raise GraphError(f"label for unknown vertex {v}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    @property
    def m(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in set(self._adj[u])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]],
                   labels: Mapping[int, str] | None = None) -> Graph:
    """Build a graph from an edge list, deduplicating parallel edges."""
    return Graph(n, edges, labels)


def open_neighborhood(g: Graph, v: int) -> VertexSet:
    return frozenset(g.neighbors(v))


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return frozenset(g.neighbors(v)) | {v}


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    """Shortest-path hop counts from source; unreachable vertices are absent."""
    if not (0 <= source < g.n):
        raise GraphError(f"source {source} outside 0..{g.n - 1}")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def connected_components(g: Graph) -> list[VertexSet]:
    """Partition of the vertices into components, ordered by minimum member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        comp = []
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and len(connected_components(g)) == 1


def contract_edges(g: Graph, matching: list[tuple[int, int]]) -> tuple[Graph, dict[int, int]]:
    """Contract a matching; each edge must lie in no triangle.

    Returns the contracted graph and the total, surjective map from old
    vertex ids to new ones.  The two endpoints of a matched edge map to
    the same new vertex.
    """
    touched: set[int] = set()
    for u, v in matching:
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        if u in touched or v in touched:
            raise GraphError(f"({u}, {v}) shares an endpoint with another matching edge")
        touched.update((u, v))
        if set(g.neighbors(u)) & set(g.neighbors(v)):
            raise GraphError(f"edge ({u}, {v}) lies in a triangle")
    rep = list(range(g.n))
    for u, v in matching:
        rep[max(u, v)] = min(u, v)
    new_id = {r: i for i, r in enumerate(sorted(set(rep)))}
    vmap = {v: new_id[rep[v]] for v in range(g.n)}
    edges = {(min(vmap[u], vmap[v]), max(vmap[u], vmap[v]))
             for u, v in g.edges() if vmap[u] != vmap[v]}
    return Graph(len(new_id), sorted(edges)), vmap


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by s; returns it with the map new id -> old id."""
    old = sorted(set(s))
    for v in old:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
    pos = {v: i for i, v in enumerate(old)}
    edges = [(pos[u], pos[v]) for u, v in g.edges() if u in pos and v in pos]
    labels = {pos[v]: g.labels[v] for v in old if v in g.labels}
    return Graph(len(old), edges, labels), dict(enumerate(old))


def dump_edge_list(g: Graph) -> str:
    """Edge-list text: `n m` header, one `u v` line per edge, then labels."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    lines.extend(f"L {v} {g.labels[v]}" for v in sorted(g.labels))
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; `#` starts a comment, `L v name` sets a label."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise GraphError("empty edge-list input")
    header = rows[0]
    if len(header) != 2:
        raise GraphError(f"header must be 'n m', got {' '.join(header)!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GraphError(f"bad header {' '.join(header)!r}") from exc
    edges = []
    labels = {}
    for tok in rows[1:]:
        if tok[0] == "L":
            if len(tok) != 3:
                raise GraphError(f"bad label line {' '.join(tok)!r}")
            labels[int(tok[1])] = tok[2]
        else:
            if len(tok) != 2:
                raise GraphError(f"bad edge line {' '.join(tok)!r}")
            edges.append((int(tok[0]), int(tok[1])))
    if len(edges) != m:
        raise GraphError(f"header promises {m} edges, found {len(edges)}")
    return Graph(n, edges, labels)
