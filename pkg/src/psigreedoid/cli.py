"""Command-line front end.

Exit codes: 0 ok, 1 negative verdict under ``--strict``, 2 input error,
3 invariant violation or classifier/oracle disagreement.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classifier import brute_force_greedoid, classify_unicycle, cycle_psi_prefilter
from .corpus import NAMES, corpus
from .errors import GraphError, InvariantViolation
from .fuzz import CYCLE_MODES, Campaign, dumps, iter_reports, summarize
from .graph import (
    DEFAULT_ENUMERATION_LIMIT,
    DEFAULT_STRUCTURAL_LIMIT,
    Graph,
    from_json,
    parse_edge_list,
    size_limits,
    to_dot,
    to_edge_list,
    to_json,
)
from .greedoid import chain_for_forest, chain_via_triangle, find_accessibility_chain
from .stability import enumerate_psi

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_INVARIANT = 0, 1, 2, 3


def load_graph(source: str) -> Graph:
    """Read ``corpus:NAME``, a JSON file, an edge-list file, or ``-`` for stdin."""
    if source.startswith("corpus:"):
        return corpus(source[len("corpus:"):])
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise GraphError(f"cannot read {source}: {exc.strerror}") from None
    if source.endswith(".json") or text.lstrip().startswith("{"):
        return from_json(text)
    return parse_edge_list(text)


def _emit(args, payload, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _fmt_sets(sets) -> str:
    return "\n".join("{" + ", ".join(sorted(s)) + "}" for s in sets)


def cmd_classify(args) -> int:
    g = load_graph(args.graph)
    v = classify_unicycle(g)
    text = f"greedoid: {str(v.is_greedoid).lower()}  branch: {v.branch}  cycle: {v.cycle_length}  |Psi|: {v.psi_size}"
    if v.witness is not None:
        text += f"\nwitness ({v.witness.kind}): {json.dumps(v.witness.to_json())}"
    _emit(args, v.to_json(), text)
    return EXIT_FALSE if args.strict and not v.is_greedoid else EXIT_OK


def cmd_brute(args) -> int:
    g = load_graph(args.graph)
    v = brute_force_greedoid(g)
    text = f"greedoid: {str(v.is_greedoid).lower()}  |Psi|: {v.psi_size}"
    if v.witness is not None:
        text += f"\nwitness ({v.witness.kind}): {json.dumps(v.witness.to_json())}"
    _emit(args, v.to_json(), text)
    return EXIT_FALSE if args.strict and not v.is_greedoid else EXIT_OK


def cmd_psi(args) -> int:
    psi = enumerate_psi(load_graph(args.graph))
    _emit(args, psi.to_json(), _fmt_sets(psi) if len(psi) else "(only the empty set)")
    return EXIT_OK


def cmd_chain(args) -> int:
    g = load_graph(args.graph)
    target = [t for t in args.set.split(",") if t]
    if args.method == "forest":
        chain = chain_for_forest(g, target)
    elif args.method == "triangle":
        chain = chain_via_triangle(g, target, strict=args.strict_proof)
    else:
        chain = find_accessibility_chain(g, target)
    if chain is None:
        _emit(args, None, "no accessibility chain")
        return EXIT_FALSE if args.strict else EXIT_OK
    payload = {"chain": chain.to_json(), "cases": list(chain.cases)}
    text = _fmt_sets(chain.steps)
    if chain.cases:
        text += "\ncases: " + " ".join(chain.cases)
    _emit(args, payload, text)
    return EXIT_OK


def cmd_prefilter(args) -> int:
    ok, w = cycle_psi_prefilter(load_graph(args.graph))
    payload = {"result": ok, "witness": w.to_json() if w else None}
    text = "inconclusive" if ok else f"not a greedoid; witness {json.dumps(w.to_json())}"
    _emit(args, payload, text)
    return EXIT_FALSE if args.strict and not ok else EXIT_OK


def cmd_fuzz(args) -> int:
    campaign = Campaign(args.count, args.max_n, args.cycle, args.seed, args.disconnected, args.timing)
    out = open(args.output, "w", encoding="utf-8") if args.output else sys.stdout
    reports = []
    try:
        for r in iter_reports(campaign, args.jobs, (args.max_vertices, args.max_psi_vertices)):
            reports.append(r)
            out.write(dumps(r) + "\n")
        summary = summarize(campaign, reports)
        out.write(dumps(summary) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK if summary["ok"] else EXIT_INVARIANT


def cmd_corpus(args) -> int:
    if args.name is None:
        print("\n".join(NAMES))
        return EXIT_OK
    print(to_edge_list(corpus(args.name)), end="")
    return EXIT_OK


def cmd_export(args) -> int:
    g = load_graph(args.graph)
    if args.format == "dot":
        print(to_dot(g), end="")
    elif args.format == "json":
        print(json.dumps(to_json(g)))
    else:
        print(to_edge_list(g), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="psigreedoid",
        description="Decide whether the local maximum stable sets of a forest or unicycle graph form a greedoid.",
    )
    p.add_argument("--max-vertices", type=int, default=DEFAULT_STRUCTURAL_LIMIT,
                   help="size guard for structural operations (default %(default)s)")
    p.add_argument("--max-psi-vertices", type=int, default=DEFAULT_ENUMERATION_LIMIT,
                   help="size guard for Psi enumeration (default %(default)s)")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, func, help: str, strict: bool = True):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("graph", help="edge-list or JSON file, '-' for stdin, or corpus:NAME")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        if strict:
            sp.add_argument("--strict", action="store_true", help="exit 1 on a negative answer")
        sp.set_defaults(func=func)
        return sp

    graph_cmd("classify", cmd_classify, "classify by cycle length")
    graph_cmd("brute", cmd_brute, "check the greedoid axioms on the enumerated family")
    graph_cmd("psi", cmd_psi, "list the local maximum stable sets", strict=False)
    sp = graph_cmd("chain", cmd_chain, "build an accessibility chain for a set")
    sp.add_argument("--set", required=True, help="comma-separated vertex labels")
    sp.add_argument("--method", choices=("search", "forest", "triangle"), default="search")
    sp.add_argument("--strict-proof", action="store_true",
                    help="triangle method: follow the case rules literally, no repair")
    graph_cmd("prefilter", cmd_prefilter, "induced-cycle sufficient test for non-greedoids")

    sp = sub.add_parser("fuzz", help="seeded classifier-vs-oracle campaign (JSON Lines)")
    sp.add_argument("--count", type=int, default=100)
    sp.add_argument("--max-n", type=int, default=12)
    sp.add_argument("--cycle", choices=CYCLE_MODES, default="any")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--disconnected", action="store_true")
    sp.add_argument("--timing", action="store_true", help="add per-instance seconds (breaks byte determinism)")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--output", "-o", help="write the stream to a file")
    sp.set_defaults(func=cmd_fuzz)

    sp = sub.add_parser("corpus", help="list built-in figure graphs or print one")
    sp.add_argument("name", nargs="?", choices=NAMES)
    sp.set_defaults(func=cmd_corpus)

    sp = sub.add_parser("export", help="convert a graph")
    sp.add_argument("graph")
    sp.add_argument("--format", choices=("dot", "json", "edges"), default="dot")
    sp.set_defaults(func=cmd_export)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with size_limits(args.max_vertices, args.max_psi_vertices):
            return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
