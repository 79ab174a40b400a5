"""Exact search for ECD / EOD sets and EOCD certificates.

ECD sets (perfect codes) are exact covers of the vertex set by closed
neighborhoods; EOD sets are exact covers by open neighborhoods.  The
search is a backtracking exact-cover solver over neighborhood bitmasks,
branching on the uncovered vertex with the fewest remaining covering
candidates (ties by smallest vertex id), so results are deterministic.

Domination numbers gamma and gamma_t are computed exactly at desk scale
by iterative deepening below a greedy upper bound.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, VertexSet, induced_subgraph


class SearchMode(enum.Enum):
    ANY = "any"
    EMPTY_INTERSECTION = "empty-dp"  # require D and P disjoint
    EMPTY_P_MINUS_D = "empty-pd"     # require P a subset of D


class IsolatedVertexError(ValueError):
    """gamma_t is undefined on graphs with isolated vertices."""


class InvalidCertificateError(ValueError):
    pass


def open_masks(g: Graph) -> list[int]:
    masks = [0] * g.n
    for v in range(g.n):
        for w in g.neighbors(v):
            masks[v] |= 1 << w
    return masks


def closed_masks(g: Graph) -> list[int]:
    return [m | (1 << v) for v, m in enumerate(open_masks(g))]


def _is_exact_cover(n: int, masks: list[int], chosen) -> bool:
    covered = 0
    for v in chosen:
        m = masks[v]
        if covered & m:
            return False
        covered |= m
    return covered == (1 << n) - 1


def is_ecd_set(g: Graph, p) -> bool:
    """True iff the closed neighborhoods of p partition V(G)."""
    return _is_exact_cover(g.n, closed_masks(g), p)


def is_eod_set(g: Graph, d) -> bool:
    """True iff the open neighborhoods of d partition V(G)."""
    return _is_exact_cover(g.n, open_masks(g), d)


def exact_covers(n: int, masks: dict[int, int]) -> Iterator[frozenset]:
    """All exact covers of {0..n-1} by the given candidate masks.

    Candidates are keyed by their center vertex; a solution is the set of
    chosen centers.  Empty candidate masks never participate.
    """
    full = (1 << n) - 1
    cand = {c: m for c, m in sorted(masks.items()) if m}
    cover_by: list[list[int]] = [[] for _ in range(n)]
    for c, m in cand.items():
        mm = m
        while mm:
            b = mm & -mm
            cover_by[b.bit_length() - 1].append(c)
            mm ^= b

    def rec(covered: int, chosen: list[int]) -> Iterator[frozenset]:
        if covered == full:
            yield frozenset(chosen)
            return
        best = None
        mm = ~covered & full
        while mm:
            b = mm & -mm
            v = b.bit_length() - 1
            mm ^= b
            options = [c for c in cover_by[v] if not cand[c] & covered]
            if best is None or len(options) < len(best):
                best = options
                if not options:
                    return
        for c in best:
            chosen.append(c)
            yield from rec(covered | cand[c], chosen)
            chosen.pop()

    if n == 0:
        yield frozenset()
        return
    yield from rec(0, [])


def iter_ecd_sets(g: Graph, allowed=None) -> Iterator[VertexSet]:
    masks = closed_masks(g)
    keys = range(g.n) if allowed is None else sorted(allowed)
    yield from exact_covers(g.n, {v: masks[v] for v in keys})


def iter_eod_sets(g: Graph, allowed=None) -> Iterator[VertexSet]:
    masks = open_masks(g)
    keys = range(g.n) if allowed is None else sorted(allowed)
    yield from exact_covers(g.n, {v: masks[v] for v in keys})


def find_ecd(g: Graph) -> VertexSet | None:
    return next(iter_ecd_sets(g), None)


def find_eod(g: Graph) -> VertexSet | None:
    return next(iter_eod_sets(g), None)


@dataclass(frozen=True)
class EocdCertificate:
    """A pair (D, P) witnessing that a graph is an EOCD graph.

    D is an EOD set, P an ECD set; the derived four-way partition
    (D&P, D-P, P-D, R) drives the structure checks.
    """

    n: int
    d: VertexSet
    p: VertexSet

    @property
    def dp(self) -> VertexSet:
        return self.d & self.p

    @property
    def d_only(self) -> VertexSet:
        return self.d - self.p

    @property
    def p_only(self) -> VertexSet:
        return self.p - self.d

    @property
    def r(self) -> VertexSet:
        return frozenset(range(self.n)) - (self.d | self.p)

    def validate(self, g: Graph) -> None:
        if g.n != self.n:
            raise InvalidCertificateError(f"certificate is for n={self.n}, graph has n={g.n}")
        if not is_eod_set(g, self.d):
            raise InvalidCertificateError(f"D={sorted(self.d)} is not an EOD set")
        if not is_ecd_set(g, self.p):
            raise InvalidCertificateError(f"P={sorted(self.p)} is not an ECD set")

    def to_record(self) -> dict:
        """Machine-readable form with sorted vertex-id arrays."""
        return {
            "D": sorted(self.d),
            "P": sorted(self.p),
            "dp": sorted(self.dp),
            "d_only": sorted(self.d_only),
            "p_only": sorted(self.p_only),
            "r": sorted(self.r),
        }


def find_eocd(g: Graph, mode: SearchMode = SearchMode.ANY) -> EocdCertificate | None:
    """Search for an EOCD certificate under the given mode.

    In ANY mode D and P are searched independently (EOCD = EOD and ECD).
    The constrained modes couple the searches: D is enumerated and the
    P-search is restricted to the allowed centers.  The constrained
    searches are exponential in the worst case; no polynomial behavior is
    claimed for EMPTY_INTERSECTION.
    """
    if mode is SearchMode.ANY:
        d = find_eod(g)
        if d is None:
            return None
        p = find_ecd(g)
        if p is None:
            return None
        return EocdCertificate(g.n, d, p)
    for d in iter_eod_sets(g):
        if mode is SearchMode.EMPTY_INTERSECTION:
            allowed = frozenset(range(g.n)) - d
        else:
            allowed = d
        p = next(iter_ecd_sets(g, allowed), None)
        if p is not None:
            return EocdCertificate(g.n, d, p)
    return None


def _greedy_cover_bound(n: int, masks: list[int]) -> list[int] | None:
    chosen = []
    covered = 0
    full = (1 << n) - 1
    while covered != full:
        best_v, best_gain = -1, 0
        for v in range(n):
            gain = bin(masks[v] & ~covered).count("1")
            if gain > best_gain:
                best_v, best_gain = v, gain
        if best_gain == 0:
            return None
        chosen.append(best_v)
        covered |= masks[best_v]
    return chosen


def _min_cover_size(n: int, masks: list[int]) -> int:
    """Minimum number of masks whose union is the full vertex set.

    Iterative deepening: for each target size, branch on the lowest
    uncovered vertex over the candidates that cover it.
    """
    if n == 0:
        return 0
    full = (1 << n) - 1
    ub = _greedy_cover_bound(n, masks)
    if ub is None:
        raise ValueError("no cover exists")
    cover_by: list[list[int]] = [[] for _ in range(n)]
    for c, m in enumerate(masks):
        mm = m
        while mm:
            b = mm & -mm
            cover_by[b.bit_length() - 1].append(c)
            mm ^= b
    max_gain = max(bin(m).count("1") for m in masks)

    def exists(covered: int, left: int) -> bool:
        if covered == full:
            return True
        if left == 0:
            return False
        missing = bin(~covered & full).count("1")
        if missing > left * max_gain:
            return False
        v = (~covered & full)
        v = (v & -v).bit_length() - 1
        for c in cover_by[v]:
            if exists(covered | masks[c], left - 1):
                return True
        return False

    for k in range(1, len(ub)):
        if exists(0, k):
            return k
    return len(ub)


def gamma(g: Graph) -> int:
    """The domination number, computed exactly."""
    return _min_cover_size(g.n, closed_masks(g))


def gamma_t(g: Graph) -> int:
    """The total domination number; errors out on isolated vertices."""
    masks = open_masks(g)
    for v, m in enumerate(masks):
        if m == 0:
            raise IsolatedVertexError(f"vertex {v} is isolated; gamma_t is undefined")
    return _min_cover_size(g.n, masks)


@dataclass
class StructureReport:
    """Pass/fail per structural rule of the four-way partition."""

    checks: list[tuple[str, bool, str]]

    @property
    def all_pass(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    def failures(self) -> list[tuple[str, str]]:
        return [(name, detail) for name, ok, detail in self.checks if not ok]


def _components(g: Graph) -> list[list[int]]:
    from .graph import connected_components
    return [sorted(c) for c in connected_components(g)]


def _is_disjoint_p4s(g: Graph) -> bool:
    for comp in _components(g):
        if len(comp) != 4:
            return False
        degs = sorted(g.degree(v) for v in comp)
        if degs != [1, 1, 2, 2]:
            return False
    return True


def classify_partition(g: Graph, cert: EocdCertificate) -> StructureReport:
    """Check every structural rule the partition (D&P, D-P, P-D, R) must obey."""
    cert.validate(g)
    dp, d_only, p_only = cert.dp, cert.d_only, cert.p_only
    r = cert.r
    checks: list[tuple[str, bool, str]] = []

    def neighbor_counts(v):
        nb = g.neighbors(v)
        return (sum(1 for w in nb if w in dp),
                sum(1 for w in nb if w in d_only),
                sum(1 for w in nb if w in p_only))

    def bullet(name, vertices, pred):
        for v in vertices:
            if not pred(v):
                checks.append((name, False, f"counterexample vertex {v}"))
                return
        checks.append((name, True, ""))

    bullet("dp-vertices: one D-P neighbor, no P-D neighbors", sorted(dp),
           lambda v: neighbor_counts(v)[1] == 1 and neighbor_counts(v)[2] == 0)
    bullet("p-only vertices: one D-P neighbor, no D&P neighbors", sorted(p_only),
           lambda v: neighbor_counts(v)[1] == 1 and neighbor_counts(v)[0] == 0)

    def two_way(v):
        c_dp, c_do, c_po = neighbor_counts(v)
        return ((c_po == 1 and c_do == 1 and c_dp == 0)
                or (c_dp == 1 and c_po == 0 and c_do == 0))

    bullet("d-only vertices: (one P-D and one D-P neighbor) or one D&P neighbor",
           sorted(d_only), two_way)
    bullet("R vertices: (one P-D and one D-P neighbor) or one D&P neighbor",
           sorted(r), two_way)

    partners_dp = {w for v in dp for w in g.neighbors(v) if w in d_only}
    sub, _ = induced_subgraph(g, dp | partners_dp)
    ok = all(sub.degree(v) == 1 for v in range(sub.n))
    checks.append(("D&P with their D-P partners induce a matching", ok,
                   "" if ok else "induced subgraph is not a perfect matching"))

    partners_po = {w for v in p_only for w in g.neighbors(v) if w in d_only}
    partners_po |= {w for v in partners_po for w in g.neighbors(v) if w in d_only}
    sub4, _ = induced_subgraph(g, p_only | partners_po)
    ok4 = _is_disjoint_p4s(sub4) if sub4.n else True
    k = sub4.n // 4
    ok4 = ok4 and 2 * k == len(p_only)
    checks.append(("P-D with their D-P partners induce k copies of P4, 2k = |P-D|",
                   ok4, "" if ok4 else f"induced subgraph on {sub4.n} vertices is not kP4"))
    return StructureReport(checks)


def check_empty_dp_characterization(g: Graph, a) -> bool:
    """Characterization of EOCD graphs with disjoint D and P.

    <A> must be a disjoint union of P4s, and every vertex outside A must
    be adjacent to exactly one degree-1 vertex of <A> and exactly one
    degree-2 vertex of <A>.
    """
    a = frozenset(a)
    sub, vmap = induced_subgraph(g, a)
    if sub.n % 4 != 0 or not _is_disjoint_p4s(sub):
        return False
    deg_in_a = {vmap[i]: sub.degree(i) for i in range(sub.n)}
    for v in range(g.n):
        if v in a:
            continue
        d1 = sum(1 for w in g.neighbors(v) if w in a and deg_in_a[w] == 1)
        d2 = sum(1 for w in g.neighbors(v) if w in a and deg_in_a[w] == 2)
        if d1 != 1 or d2 != 1:
            return False
    return True


def check_empty_pd_characterization(g: Graph, d) -> bool:
    """Characterization of EOCD graphs with P contained in D.

    <D> must be a perfect matching on D, every matching edge must contain
    a vertex of degree 1 in G, and every outside vertex must be adjacent
    to exactly one matched vertex, namely the designated P-endpoint.
    """
    d = frozenset(d)
    partner = {}
    for v in d:
        inside = [w for w in g.neighbors(v) if w in d]
        if len(inside) != 1:
            return False
        partner[v] = inside[0]
    p_end = set()
    for v in sorted(d):
        w = partner[v]
        if v > w:
            continue
        leaves = [x for x in (v, w) if g.degree(x) == 1]
        if not leaves:
            return False
        others = [x for x in (v, w) if g.degree(x) > 1]
        p_end.add(others[0] if others else min(v, w))
    for v in range(g.n):
        if v in d:
            continue
        hits = [w for w in g.neighbors(v) if w in d]
        if len(hits) != 1 or hits[0] not in p_end:
            return False
    return True
