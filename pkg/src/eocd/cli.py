"""Command-line front end.

Subcommands: generate, solve, verify, recognize-empty-pd, tree
(decompose / replay / random), reduce, report.  Exit codes: 0 the
question was decided true / the artifact verified, 1 decided false or no
certificate, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import claims
from .families import complete_bipartite, cycle, hypercube, path
from .graph import Graph, GraphError, dump_edge_list, parse_edge_list
from .recognizer import recognize_empty_pd
from .reduction import FormulaError, assignment_from_witness, build_reduction, parse_dimacs
from .sierpinski import sierpinski
from .solver import (
    EocdCertificate,
    SearchMode,
    find_eocd,
    gamma,
    gamma_t,
    is_ecd_set,
    is_eod_set,
)
from .trees import (
    DecomposeError,
    OpPreconditionError,
    TreeOpSequence,
    decompose,
    random_eocd_tree,
    replay,
)

DEFAULT_MAX_VERTICES = 4096


class UsageError(Exception):
    pass


def _max_vertices(args) -> int:
    if args.max_vertices is not None:
        return args.max_vertices
    env = os.environ.get("EOCD_MAX_VERTICES")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"EOCD_MAX_VERTICES={env!r} is not an integer")
    return DEFAULT_MAX_VERTICES


def _load_graph(args, fname: str) -> Graph:
    try:
        with open(fname, encoding="utf-8") as fh:
            g = parse_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {fname}: {exc}")
    cap = _max_vertices(args)
    if g.n > cap:
        raise UsageError(f"{fname} has {g.n} vertices, above --max-vertices {cap}")
    return g


def _write_output(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _show(args, g: Graph, vertices) -> str:
    ids = sorted(vertices)
    if args.labels and g.labels:
        return "[" + ", ".join(g.labels.get(v, str(v)) for v in ids) + "]"
    return "[" + ", ".join(map(str, ids)) + "]"


def _print_certificate(args, g: Graph, cert: EocdCertificate) -> None:
    rec = cert.to_record()
    for key in ("D", "P", "dp", "d_only", "p_only", "r"):
        print(f"{key:7s} {_show(args, g, rec[key])}")


def _parse_ids(text: str, n: int, flag: str) -> frozenset:
    try:
        ids = frozenset(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise UsageError(f"{flag} expects integer vertex ids, got {text!r}")
    bad = [v for v in ids if not 0 <= v < n]
    if bad:
        raise UsageError(f"{flag} contains out-of-range vertex id {bad[0]}")
    return ids


def _cmd_generate(args) -> int:
    cap = _max_vertices(args)
    kind, params = args.family, args.params
    try:
        values = [int(tok) for tok in params]
    except ValueError:
        if kind != "reduction":
            raise UsageError(f"{kind} parameters must be integers, got {params}")
        values = []
    if kind == "path":
        (n,) = _arity(kind, values, 1)
        g = path(n)
    elif kind == "cycle":
        (n,) = _arity(kind, values, 1)
        g = cycle(n)
    elif kind == "complete-bipartite":
        r, t = _arity(kind, values, 2)
        g = complete_bipartite(r, t)
    elif kind == "hypercube":
        (n,) = _arity(kind, values, 1)
        g = hypercube(n)
    elif kind == "sierpinski":
        p, n = _arity(kind, values, 2)
        g = sierpinski(p, n, max_vertices=cap)
    elif kind == "reduction":
        if len(params) != 1:
            raise UsageError("reduction takes one parameter: a CNF file")
        g, _ = build_reduction(_load_formula(params[0]))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {kind!r}")
    if g.n > cap:
        raise UsageError(f"generated graph has {g.n} vertices, above --max-vertices {cap}")
    _write_output(args, dump_edge_list(g))
    return 0


def _arity(kind: str, values: list[int], want: int) -> list[int]:
    if len(values) != want:
        raise UsageError(f"{kind} takes {want} integer parameter(s), got {values}")
    return values


def _load_formula(fname: str):
    try:
        with open(fname, encoding="utf-8") as fh:
            return parse_dimacs(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {fname}: {exc}")


_MODES = {
    "any": SearchMode.ANY,
    "empty-dp": SearchMode.EMPTY_INTERSECTION,
    "empty-pd": SearchMode.EMPTY_P_MINUS_D,
}


def _cmd_solve(args) -> int:
    g = _load_graph(args, args.graph)
    if args.gamma:
        print(f"gamma   {gamma(g)}")
    if args.gamma_t:
        print(f"gamma_t {gamma_t(g)}")
    cert = find_eocd(g, _MODES[args.mode])
    if cert is None:
        print(f"no EOCD certificate (mode {args.mode})")
        return 1
    _print_certificate(args, g, cert)
    return 0


def _diagnose(g: Graph, members: frozenset, closed: bool, name: str) -> str:
    for x in range(g.n):
        hits = [w for w in g.neighbors(x) if w in members]
        if closed and x in members:
            hits.append(x)
        if len(hits) == 0:
            return f"vertex {x} is uncovered by {name}"
        if len(hits) > 1:
            return (f"vertex {x} is doubly covered by {name} "
                    f"(via {sorted(hits)[0]} and {sorted(hits)[1]})")
    return f"{name} is valid"


def _cmd_verify(args) -> int:
    g = _load_graph(args, args.graph)
    d = _parse_ids(args.d, g.n, "--d")
    p = _parse_ids(args.p, g.n, "--p")
    ok = True
    if is_eod_set(g, d):
        print("D: valid EOD set")
    else:
        print(f"D: invalid — {_diagnose(g, d, closed=False, name='D')}")
        ok = False
    if is_ecd_set(g, p):
        print("P: valid ECD set")
    else:
        print(f"P: invalid — {_diagnose(g, p, closed=True, name='P')}")
        ok = False
    if ok:
        _print_certificate(args, g, EocdCertificate(g.n, d, p))
    return 0 if ok else 1


def _cmd_recognize(args) -> int:
    g = _load_graph(args, args.graph)
    cert = recognize_empty_pd(g)
    if cert is None:
        print("no certificate with P contained in D")
        return 1
    _print_certificate(args, g, cert)
    return 0


def _cmd_tree_decompose(args) -> int:
    g = _load_graph(args, args.graph)
    d = _parse_ids(args.d, g.n, "--d")
    p = _parse_ids(args.p, g.n, "--p")
    seq = decompose(g, d, p)
    _write_output(args, seq.serialize())
    return 0


def _cmd_tree_replay(args) -> int:
    try:
        with open(args.sequence, encoding="utf-8") as fh:
            seq = TreeOpSequence.parse(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.sequence}: {exc}")
    g, d, p = replay(seq)
    _write_output(args, dump_edge_list(g))
    print(f"D       {_show(args, g, d)}")
    print(f"P       {_show(args, g, p)}")
    return 0


def _cmd_tree_random(args) -> int:
    g, d, p, seq = random_eocd_tree(steps=args.steps, seed=args.seed)
    cap = _max_vertices(args)
    if g.n > cap:
        raise UsageError(f"grown tree has {g.n} vertices, above --max-vertices {cap}")
    _write_output(args, dump_edge_list(g))
    print(f"D       {_show(args, g, d)}")
    print(f"P       {_show(args, g, p)}")
    print("sequence:")
    sys.stdout.write(seq.serialize())
    return 0


def _cmd_reduce(args) -> int:
    f = _load_formula(args.cnf)
    g, _ = build_reduction(f)
    cap = _max_vertices(args)
    if g.n > cap:
        raise UsageError(f"reduction graph has {g.n} vertices, above --max-vertices {cap}")
    if args.output:
        _write_output(args, dump_edge_list(g))
    if not (args.solve or args.extract):
        if not args.output:
            _write_output(args, dump_edge_list(g))
        return 0
    cert = find_eocd(g)
    if cert is None:
        print("no EOCD certificate: formula has no one-in-three model")
        return 1
    _print_certificate(args, g, cert)
    if args.extract:
        assignment = assignment_from_witness(f, g, cert.d, cert.p)
        pretty = ", ".join(f"x{i + 1}={'T' if b else 'F'}"
                           for i, b in enumerate(assignment))
        print(f"assignment: {pretty}")
    return 0


def _cmd_report(args) -> int:
    results = claims.run_all(report=lambda r: print(r.line, flush=True))
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="eocd",
        description="Efficient open/closed domination: solvers, generators, "
                    "tree operations, and the satisfiability reduction.")
    top.add_argument("--max-vertices", type=int, default=None,
                     help="exact-search size guard (default 4096 or $EOCD_MAX_VERTICES)")
    top.add_argument("--labels", action="store_true",
                     help="print vertex labels instead of ids where available")
    sub = top.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a family instance as an edge list")
    g.add_argument("family", choices=["path", "cycle", "complete-bipartite",
                                      "hypercube", "sierpinski", "reduction"])
    g.add_argument("params", nargs="*", help="family parameters (reduction: a CNF file)")
    g.add_argument("-o", "--output", help="output file (default stdout)")
    g.set_defaults(func=_cmd_generate)

    s = sub.add_parser("solve", help="search for an EOCD certificate")
    s.add_argument("graph")
    s.add_argument("--mode", choices=sorted(_MODES), default="any")
    s.add_argument("--gamma", action="store_true", help="also print the domination number")
    s.add_argument("--gamma-t", action="store_true",
                   help="also print the total domination number")
    s.set_defaults(func=_cmd_solve)

    v = sub.add_parser("verify", help="check a claimed (D, P) certificate")
    v.add_argument("graph")
    v.add_argument("--d", required=True, help="comma-separated EOD vertex ids")
    v.add_argument("--p", required=True, help="comma-separated ECD vertex ids")
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("recognize-empty-pd",
                       help="linear-time search for a certificate with P inside D")
    r.add_argument("graph")
    r.set_defaults(func=_cmd_recognize)

    t = sub.add_parser("tree", help="tree operations O1-O5")
    tsub = t.add_subparsers(dest="tree_command", required=True)
    td = tsub.add_parser("decompose", help="peel a certified tree down to an edge")
    td.add_argument("graph")
    td.add_argument("--d", required=True)
    td.add_argument("--p", required=True)
    td.add_argument("-o", "--output")
    td.set_defaults(func=_cmd_tree_decompose)
    tr = tsub.add_parser("replay", help="rebuild a tree from an operation sequence")
    tr.add_argument("sequence")
    tr.add_argument("-o", "--output")
    tr.set_defaults(func=_cmd_tree_replay)
    tn = tsub.add_parser("random", help="grow a random certified tree")
    tn.add_argument("--steps", type=int, required=True)
    tn.add_argument("--seed", type=int, required=True)
    tn.add_argument("-o", "--output")
    tn.set_defaults(func=_cmd_tree_random)

    d = sub.add_parser("reduce", help="build the graph of a one-in-three formula")
    d.add_argument("cnf")
    d.add_argument("-o", "--output")
    d.add_argument("--solve", action="store_true", help="also run the EOCD search")
    d.add_argument("--extract", action="store_true",
                   help="solve and translate the witness back to an assignment")
    d.set_defaults(func=_cmd_reduce)

    rep = sub.add_parser("report", help="recheck the headline results")
    rep.add_argument("what", choices=["paper-claims"])
    rep.set_defaults(func=_cmd_report)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, GraphError, FormulaError, DecomposeError,
            OpPreconditionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
