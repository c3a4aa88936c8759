"""Command-line front end.

Exit status: 0 on success (and for the "negative" verdict of each query),
10 when ``dsep`` finds the sets connected, 11 when ``cycles`` finds an active
cycle, 12 when ``verify`` finds a failure, 13 when ``localrel`` finds a
violation; 64 for usage or query errors, 65 for malformed graphs, 66 when
the input file cannot be read.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import islice

from .dag import topological_order
from .errors import InvalidQuery, NotLocal, UnknownCheckName
from .formats import parse_graph, parse_node_list
from .order import minimal_trails, trail_key
from .structure import decompose_local, find_active_cycles, has_local_relationships
from .trails import blocking_node, d_separated, enumerate_trails, is_activated, trails_xyz
from .verify import CHECKS, GenSpec, run_suite

EXIT_OK = 0
EXIT_CONNECTED = 10
EXIT_CYCLE = 11
EXIT_VERIFY_FAILED = 12
EXIT_NOT_LOCAL = 13
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NOINPUT = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_graph(args):
    try:
        if args.graph == "-":
            data = sys.stdin.buffer.read()
        else:
            with open(args.graph, "rb") as fh:
                data = fh.read()
    except OSError as exc:
        raise FileNotFoundError(f"cannot read {args.graph}: {exc.strerror}") from None
    return parse_graph(data, args.format)


def _nodes(d, text, flag):
    try:
        return parse_node_list(text, d)
    except KeyError as exc:
        raise UsageError(f"{flag}: {exc.args[0]}") from None


def _xyz(d, args):
    x = _nodes(d, args.x, "--x")
    y = _nodes(d, args.y, "--y")
    z = _nodes(d, args.z, "--z")
    return x, y, z


def _labels(d, nodes):
    return [d.name(v) for v in nodes]


def _decomposition_doc(d, dec):
    return {
        "trail": dec.trail.render(d),
        "converging": _labels(d, dec.converging),
        "witnesses": [
            {
                "node": d.name(w.node),
                "in_z": w.in_z,
                "path": None if w.in_z else _labels(d, w.path.nodes),
            }
            for w in dec.witnesses
        ],
        "subtrails": [s.render(d) for s in dec.subtrails],
    }


# --------------------------------------------------------------------------
# commands; each returns (exit code, json document, text lines)


def cmd_validate(args):
    d = _read_graph(args)
    doc = {
        "nodes": d.n,
        "arcs": len(d.arcs),
        "topological_order": _labels(d, topological_order(d)),
    }
    text = [
        f"valid DAG: {d.n} nodes, {len(d.arcs)} arcs",
        "topological order: " + " ".join(doc["topological_order"]),
    ]
    return EXIT_OK, doc, text


def cmd_dsep(args):
    d = _read_graph(args)
    x, y, z = _xyz(d, args)
    sep = d_separated(d, x, y, z)
    doc = {"x": _labels(d, x), "y": _labels(d, y), "z": _labels(d, z), "separated": sep}
    text = ["true" if sep else "false"]
    if sep:
        # a sample of blocked trails with the first node that blocks each
        blocked = []
        every = (t for a in x for b in y for t in enumerate_trails(d, a, b))
        for t in islice(every, args.limit):
            pos, reason = blocking_node(d, t, z)
            blocked.append({"trail": t.render(d), "node": d.name(t.nodes[pos]), "reason": reason})
            text.append(f"  blocked at {d.name(t.nodes[pos])} ({reason}): {t.render(d)}")
        doc["blocked"] = blocked
        if not blocked:
            text.append("  no trails join X and Y")
    else:
        every = (t for a in x for b in y for t in enumerate_trails(d, a, b))
        t = next(t for t in every if is_activated(d, t, z))
        doc["active_trail"] = t.render(d)
        text.append(f"  activated trail: {t.render(d)}")
    return (EXIT_OK if sep else EXIT_CONNECTED), doc, text


def cmd_trails(args):
    d = _read_graph(args)
    x, y, z = _xyz(d, args)
    found = trails_xyz(d, x, y, z)
    shown = found if args.limit is None else found[: args.limit]
    rows = [{"trail": t.render(d), "key": list(trail_key(d, t, z))} for t in shown]
    doc = {"count": len(found), "truncated": len(shown) < len(found), "trails": rows}
    text = [f"{len(found)} activated trail(s)"]
    text += [f"  {tuple(r['key'])}  {r['trail']}" for r in rows]
    if doc["truncated"]:
        text.append(f"  ... {len(found) - len(shown)} more")
    return EXIT_OK, doc, text


def cmd_minimal(args):
    d = _read_graph(args)
    x, y, z = _xyz(d, args)
    res = minimal_trails(d, x, y, z)
    doc = {
        "key": None if res.key is None else list(res.key),
        "minimizers": [_decomposition_doc(d, dec) for dec in res.decompositions],
    }
    if not res:
        return EXIT_OK, doc, ["no activated trails (d-separated)"]
    text = [f"minimal key {tuple(res.key)}, {len(res.trails)} minimizer(s)"]
    for m in doc["minimizers"]:
        text.append(f"  {m['trail']}")
        for w in m["witnesses"]:
            how = "in Z" if w["in_z"] else "via " + " -> ".join(w["path"])
            text.append(f"    converging {w['node']}: {how}")
        text.append("    subtrails: " + " | ".join(m["subtrails"]))
    return EXIT_OK, doc, text


def cmd_cycles(args):
    d = _read_graph(args)
    found = find_active_cycles(d, stop_at_first=not args.all)
    rendered = [c.render(d) for c in found]
    doc = {"count": len(found), "active_cycles": rendered}
    text = [f"active cycle: {r}" for r in rendered] or ["no active cycles"]
    return (EXIT_CYCLE if found else EXIT_OK), doc, text


def cmd_localrel(args):
    d = _read_graph(args)
    k = _nodes(d, args.k, "--k")
    check = has_local_relationships(d, k)
    doc = {"k": _labels(d, k), "local": check.ok, "witness": None}
    if not check:
        v1, v2, t = check.witness
        doc["witness"] = {"v1": d.name(v1), "v2": d.name(v2), "trail": t.render(d)}
        text = ["false", f"  {d.name(v1)} and {d.name(v2)} not adjacent: {t.render(d)}"]
        return EXIT_NOT_LOCAL, doc, text
    text = ["true"]
    if args.decompose:
        blocks = [sorted(b) for b in decompose_local(d, k)]
        doc["blocks"] = [_labels(d, b) for b in blocks]
        text += ["  block: " + ",".join(b) for b in doc["blocks"]]
    return EXIT_OK, doc, text


def cmd_verify(args):
    names = None
    if args.checks:
        names = [s.strip() for s in args.checks.split(",") if s.strip()]
    try:
        spec = GenSpec(args.mode, args.n, p=args.p, seed=args.seed, count=args.count,
                       require_no_active_cycle=args.no_active_cycle)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    t0 = time.perf_counter()
    reports = run_suite(spec, names)
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reports)
    doc = {
        "mode": spec.mode,
        "n": spec.n,
        "passed": ok,
        "seconds": round(elapsed, 3),
        "checks": [r.to_dict() for r in reports],
    }
    text = []
    for r in reports:
        text.append(
            f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.graphs} graphs "
            f"({r.graphs_skipped} skipped), {r.instances} instances "
            f"({r.instances_skipped} skipped), {r.failure_count} failures"
        )
        for f in r.failures[:3]:
            text.append(f"    graph #{f.serial} {f.clause} {json.dumps(f.query)} {f.detail}")
    text.append(f"{'all checks passed' if ok else 'FAILURES FOUND'} in {elapsed:.1f}s")
    return (EXIT_OK if ok else EXIT_VERIFY_FAILED), doc, text


# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="mintrails", description="Minimal activated trails in DAGs.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default="text")
    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("graph", help="graph file (JSON or DOT), or - for stdin")
    graph.add_argument("--format", choices=("auto", "json", "dot"), default="auto")
    query = argparse.ArgumentParser(add_help=False)
    query.add_argument("--x", required=True, help="comma-separated labels")
    query.add_argument("--y", required=True, help="comma-separated labels")
    query.add_argument("--z", default="", help='comma-separated labels; "" is the empty set')

    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("validate", parents=[common, graph], help="check a graph")
    s.set_defaults(func=cmd_validate)
    s = sub.add_parser("dsep", parents=[common, graph, query], help="d-separation query")
    s.add_argument("--limit", type=int, default=10, help="blocked trails to show")
    s.set_defaults(func=cmd_dsep)
    s = sub.add_parser("trails", parents=[common, graph, query], help="activated trails")
    s.add_argument("--limit", type=int, default=None)
    s.set_defaults(func=cmd_trails)
    s = sub.add_parser("minimal", parents=[common, graph, query], help="minimal trails")
    s.set_defaults(func=cmd_minimal)
    s = sub.add_parser("cycles", parents=[common, graph], help="active cycles")
    s.add_argument("--all", action="store_true", help="list every witness")
    s.set_defaults(func=cmd_cycles)
    s = sub.add_parser("localrel", parents=[common, graph], help="local relationships")
    s.add_argument("--k", required=True)
    s.add_argument("--decompose", action="store_true")
    s.set_defaults(func=cmd_localrel)
    s = sub.add_parser("verify", parents=[common], help="run the theorem checks")
    s.add_argument("--mode", choices=("exhaustive", "random"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=float, default=0.5)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--checks", default="", help="comma-separated: " + ",".join(CHECKS))
    s.add_argument("--no-active-cycle", action="store_true",
                   help="drop generated graphs with an active cycle")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, doc, text = args.func(args)
    except (UsageError, InvalidQuery, UnknownCheckName, NotLocal) as exc:
        print(f"mintrails: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # ParseError, GraphError and undecodable input
        print(f"mintrails: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except FileNotFoundError as exc:
        print(f"mintrails: error: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    if args.output == "json":
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(text))
    return code


if __name__ == "__main__":
    sys.exit(main())
