"""Closed-form graph families and their EOCD predicates.

The predicates are the ground truth the exact solver is checked against:
paths are EOCD iff n != 1 (mod 4), cycles iff n == 0 (mod 12), complete
bipartite graphs iff one side is a single vertex, hypercubes iff n == 1.
"""

from __future__ import annotations

from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(r: int, t: int) -> Graph:
    if r < 1 or t < 1:
        raise ValueError(f"complete bipartite needs r, t >= 1, got {r}, {t}")
    return Graph(r + t, [(i, r + j) for i in range(r) for j in range(t)])


def hypercube(n: int) -> Graph:
    """Q_n: vertices are n-bit labels, edges join labels at Hamming distance 1."""
    if n < 1:
        raise ValueError(f"hypercube needs n >= 1, got {n}")
    edges = [(v, v ^ (1 << b)) for v in range(1 << n) for b in range(n)
             if v < v ^ (1 << b)]
    labels = {v: format(v, f"0{n}b") for v in range(1 << n)}
    return Graph(1 << n, edges, labels)


def predicted_eocd(family: str, *params: int) -> bool:
    """Closed-form EOCD truth value for a family instance."""
    if family == "path":
        (n,) = params
        return n % 4 != 1
    if family == "cycle":
        (n,) = params
        return n % 12 == 0
    if family == "complete_bipartite":
        r, t = params
        return r == 1 or t == 1
    if family == "hypercube":
        (n,) = params
        return n == 1
    raise ValueError(f"unknown family {family!r}")
