"""Reduction from One-In-Three 3-SAT to the EOCD decision problem.

Every variable contributes a fixed 23-vertex gadget; every clause
contributes one vertex wired to the u / u-bar vertex of each of its
literals.  The resulting graph is an EOCD graph exactly when the formula
has an assignment making exactly one literal per clause true, and
witnesses translate constructively in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, VertexSet
from .solver import EocdCertificate, InvalidCertificateError, is_ecd_set, is_eod_set

# Gadget-internal vertex order; global id = 23 * variable_index + offset.
GADGET_NAMES = (
    "u", "ub",
    "t1", "t2", "t3", "t4",
    "q",
    "c1", "c2", "c3", "c4", "c5", "c6", "c7",
    "v1", "v2",
    "w1", "w2", "w3", "w4", "w5", "w6", "w7",
)
GADGET_SIZE = len(GADGET_NAMES)
_OFF = {name: i for i, name in enumerate(GADGET_NAMES)}

# The 30 gadget edges.
GADGET_EDGES = (
    ("u", "ub"), ("u", "t1"), ("ub", "t1"),            # triangle
    ("u", "v1"), ("v1", "v2"), ("v2", "ub"),           # long path over v1, v2
    ("w2", "v1"), ("v1", "w1"), ("w1", "w3"), ("w3", "w4"),
    ("w4", "w5"), ("w5", "w6"), ("w6", "v2"), ("v2", "w7"),
    ("w1", "w2"), ("w2", "w3"), ("w6", "w7"), ("w7", "w5"),
    ("t1", "t2"), ("t2", "q"),                         # stem up to q
    ("t3", "q"), ("q", "t4"),                          # q's leaves
    ("q", "c1"),
    ("c1", "c2"), ("c2", "c3"), ("c3", "c4"), ("c4", "c5"),
    ("c5", "c6"), ("c6", "c7"), ("c7", "c1"),          # 7-cycle
)


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class CnfFormula:
    """Exactly-3-literal clauses; a literal is (variable index, polarity)."""

    n_vars: int
    clauses: tuple

    def __post_init__(self):
        for clause in self.clauses:
            if len(clause) != 3:
                raise FormulaError(f"clause {clause} does not have exactly 3 literals")
            seen = set()
            for var, pol in clause:
                if not (0 <= var < self.n_vars):
                    raise FormulaError(f"variable {var} outside 0..{self.n_vars - 1}")
                if not isinstance(pol, bool):
                    raise FormulaError(f"polarity must be bool, got {pol!r}")
                if var in seen:
                    raise FormulaError(f"clause {clause} repeats variable {var}")
                seen.add(var)


def parse_dimacs(text: str) -> CnfFormula:
    """DIMACS CNF subset: `p cnf <vars> <clauses>`, clauses of exactly
    three nonzero literals terminated by 0."""
    n_vars = None
    expected = None
    clauses = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            tok = line.split()
            if len(tok) != 4 or tok[1] != "cnf":
                raise FormulaError(f"bad problem line {line!r}")
            n_vars, expected = int(tok[2]), int(tok[3])
            continue
        if n_vars is None:
            raise FormulaError("clause before the problem line")
        lits = [int(t) for t in line.split()]
        if not lits or lits[-1] != 0 or 0 in lits[:-1]:
            raise FormulaError(f"clause line {line!r} must end with a single 0")
        lits = lits[:-1]
        if len(lits) != 3:
            raise FormulaError(f"clause {lits} does not have exactly 3 literals")
        clauses.append(tuple((abs(l) - 1, l > 0) for l in lits))
    if n_vars is None:
        raise FormulaError("missing problem line")
    if expected is not None and len(clauses) != expected:
        raise FormulaError(f"problem line promises {expected} clauses, found {len(clauses)}")
    return CnfFormula(n_vars, tuple(clauses))


def gadget_vertex(i: int, name: str) -> int:
    return GADGET_SIZE * i + _OFF[name]


def clause_vertex(f: CnfFormula, j: int) -> int:
    return GADGET_SIZE * f.n_vars + j


def build_gadget(i: int) -> tuple[Graph, dict[int, str]]:
    """The 23-vertex variable gadget, with ids offset for variable i."""
    edges = [(_OFF[a], _OFF[b]) for a, b in GADGET_EDGES]
    names = {off: f"{name}_{i + 1}" for name, off in _OFF.items()}
    g = Graph(GADGET_SIZE, edges, names)
    return g, names


def build_reduction(f: CnfFormula) -> tuple[Graph, dict[int, str]]:
    """The reduction graph: one gadget per variable, one vertex per clause."""
    n = GADGET_SIZE * f.n_vars + len(f.clauses)
    edges = []
    labels = {}
    for i in range(f.n_vars):
        base = GADGET_SIZE * i
        edges.extend((base + _OFF[a], base + _OFF[b]) for a, b in GADGET_EDGES)
        labels.update({base + off: f"{name}_{i + 1}" for name, off in _OFF.items()})
    for j, clause in enumerate(f.clauses):
        y = clause_vertex(f, j)
        labels[y] = f"y_{j + 1}"
        for var, pol in clause:
            edges.append((y, gadget_vertex(var, "u" if pol else "ub")))
    return Graph(n, edges, labels), labels


# per-variable witness pieces: always in D / P, plus the true/false branches
_D_ALWAYS = ("q", "c1", "c4", "c5")
_P_ALWAYS = ("q", "c3", "c6")
_D_TRUE = ("u", "v1", "w4", "w5")
_P_TRUE = ("u", "w3", "w7")
_D_FALSE = ("ub", "v2", "w3", "w4")
_P_FALSE = ("ub", "w2", "w5")


def is_one_in_three(f: CnfFormula, assignment) -> bool:
    return all(sum(1 for var, pol in clause if assignment[var] == pol) == 1
               for clause in f.clauses)


def brute_force_one_in_three(f: CnfFormula, max_vars: int = 24) -> list[tuple[bool, ...]]:
    """All assignments with exactly one true literal per clause."""
    if f.n_vars > max_vars:
        raise FormulaError(f"{f.n_vars} variables exceed the enumeration guard {max_vars}")
    out = []
    for bits in range(1 << f.n_vars):
        assignment = tuple(bool(bits >> v & 1) for v in range(f.n_vars))
        if is_one_in_three(f, assignment):
            out.append(assignment)
    return out


def witness_from_assignment(f: CnfFormula, assignment) -> EocdCertificate:
    """Build the (D, P) certificate of the reduction graph from a
    one-in-three satisfying assignment."""
    assignment = tuple(bool(b) for b in assignment)
    if len(assignment) != f.n_vars:
        raise FormulaError(f"assignment covers {len(assignment)} of {f.n_vars} variables")
    if not is_one_in_three(f, assignment):
        raise FormulaError("assignment is not one-in-three satisfying")
    g, _ = build_reduction(f)
    d: set[int] = set()
    p: set[int] = set()
    for i, value in enumerate(assignment):
        d.update(gadget_vertex(i, nm) for nm in _D_ALWAYS)
        p.update(gadget_vertex(i, nm) for nm in _P_ALWAYS)
        d.update(gadget_vertex(i, nm) for nm in (_D_TRUE if value else _D_FALSE))
        p.update(gadget_vertex(i, nm) for nm in (_P_TRUE if value else _P_FALSE))
    cert = EocdCertificate(g.n, frozenset(d), frozenset(p))
    cert.validate(g)
    return cert


def assignment_from_witness(f: CnfFormula, g: Graph, d, p) -> tuple[bool, ...]:
    """Read a one-in-three assignment off any EOD/ECD witness pair.

    The ECD set is first normalized gadget by gadget so that the variable
    vertex in P agrees with the one in D; the normalized set is
    re-verified rather than trusted, and a failure is surfaced.
    """
    d, p = frozenset(d), frozenset(p)
    if not is_eod_set(g, d):
        raise InvalidCertificateError("D is not an EOD set of the reduction graph")
    if not is_ecd_set(g, p):
        raise InvalidCertificateError("P is not an ECD set of the reduction graph")
    p_norm = set(p)
    for i in range(f.n_vars):
        u, ub = gadget_vertex(i, "u"), gadget_vertex(i, "ub")
        nice = (u in d and u in p) or (ub in d and ub in p)
        if nice:
            continue
        if u in p:
            drop = {u} | {gadget_vertex(i, nm) for nm in ("w3", "w6", "w7")}
            add = {ub} | {gadget_vertex(i, nm) for nm in ("w2", "w5")}
        elif ub in p:
            drop = {ub} | {gadget_vertex(i, nm) for nm in ("w5", "w1", "w2")}
            add = {u} | {gadget_vertex(i, nm) for nm in ("w3", "w7")}
        else:
            raise InvalidCertificateError(
                f"gadget {i}: neither variable vertex lies in P")
        p_norm = (p_norm - drop) | add
    if not is_ecd_set(g, p_norm):
        raise InvalidCertificateError("normalized P is not an ECD set; witness malformed")
    assignment = []
    for i in range(f.n_vars):
        u, ub = gadget_vertex(i, "u"), gadget_vertex(i, "ub")
        if u in d and u in p_norm:
            assignment.append(True)
        elif ub in d and ub in p_norm:
            assignment.append(False)
        else:
            raise InvalidCertificateError(
                f"gadget {i} is not nice after normalization")
    assignment = tuple(assignment)
    assert is_one_in_three(f, assignment)
    return assignment
