"""Command-line front end: ``tourpaths {enumerate,embed,origins,catalog,verify}``.

Vertex labels on the command line are 1-based unless ``--zero-based`` is
given. Exit codes: 0 success, 1 violations found, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import catalog
from .core import Digraph, InvalidArgumentError, Tournament, delete_arc, from_trn, members, to_trn
from .embed import contains_path, origins
from .enumeration import all_tournaments
from .pathtype import parse_type
from .verify import SUITES, run_suite


def _parse_shard(text: str) -> tuple[int, int]:
    try:
        i, k = (int(s) for s in text.split("/"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"shard must look like i/k, got {text!r}") from None
    if not (k >= 1 and 0 <= i < k):
        raise argparse.ArgumentTypeError(f"shard {text!r} out of range")
    return i, k


def _load_digraph(args) -> Digraph:
    text = args.trn.strip()
    if text.split()[0] in ("trn", "trnd"):
        d = from_trn(text)
    else:
        d = catalog.figure(text)
    if args.delete:
        if not isinstance(d, Tournament):
            raise InvalidArgumentError("--delete needs a tournament, not an arc-deleted digraph")
        try:
            x, y = (int(s) for s in args.delete.split(","))
        except ValueError:
            raise InvalidArgumentError(f"--delete expects x,y, got {args.delete!r}") from None
        off = 0 if args.zero_based else 1
        d = delete_arc(d, x - off, y - off)
    return d


def _fmt(vs, zero_based: bool) -> str:
    off = 0 if zero_based else 1
    return " ".join(str(v + off) for v in vs)


def _add_digraph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--trn", required=True, help="TRN v1 line ('trn <n> <hex>' or 'trnd ...') or a figure name such as 4A")
    p.add_argument("--delete", help="delete the arc between x and y, given as x,y")
    p.add_argument("--path", required=True, help="path type literal, e.g. '+(1,2)'")
    p.add_argument("--zero-based", action="store_true", help="read and print 0-based vertex labels")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tourpaths", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="print one TRN line per tournament class")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--shard", type=_parse_shard, default=(0, 1), help="i/k: the i-th of k blocks")

    p = sub.add_parser("embed", help="print a Hamiltonian witness of the type, or NONE")
    _add_digraph_args(p)

    p = sub.add_parser("origins", help="print the origins of the type")
    _add_digraph_args(p)

    p = sub.add_parser("catalog", help="audit or export the exception catalog")
    p.add_argument("--validate", action="store_true", help="check every finite record against the search engine")
    p.add_argument("--export", choices=["json"], help="print the catalog as a versioned document")
    p.add_argument("--max-order", type=int, default=catalog.MAX_CATALOG_ORDER)
    p.add_argument("--duals", action="store_true", help="include dual records in the export")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--order", type=int)
    p.add_argument("--shard", type=_parse_shard, default=(0, 1))
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", metavar="FILE", help="also write the report as JSON ('-' for stdout)")
    return ap


def _cmd_enumerate(args) -> int:
    for t in all_tournaments(args.order, args.shard):
        print(to_trn(t))
    return 0


def _cmd_embed(args) -> int:
    d = _load_digraph(args)
    w = contains_path(d, parse_type(args.path))
    print("NONE" if w is None else _fmt(w, args.zero_based))
    return 0


def _cmd_origins(args) -> int:
    d = _load_digraph(args)
    print(_fmt(members(origins(d, parse_type(args.path))), args.zero_based))
    return 0


def _cmd_catalog(args) -> int:
    if args.export == "json":
        print(catalog.catalog_json(args.max_order, include_duals=args.duals))
        return 0
    failed = 0
    recs = catalog.finite_records()
    for r in recs:
        line = f"{r.id:6s} {r.figure:3s} {str(r.path_type):18s} S={catalog._labels(members(r.non_origins))}"
        if args.validate:
            chk = catalog.validate_record(r)
            failed += not chk.passed
            line += "  PASS" if chk.passed else "  FAIL " + "; ".join(chk.problems)
        if r.flags:
            line += "  [" + "; ".join(r.flags) + "]"
        print(line)
    for name in catalog.figure_names():
        variants = catalog.figure_variants(name)
        if len(variants) > 1:
            print(f"figure {name}: {len(variants)} admissible completions: " + ", ".join(to_trn(t) for t in variants))
    print(f"{len(recs)} finite records" + (f", {failed} failed" if args.validate else ""))
    return 1 if failed else 0


def _cmd_verify(args) -> int:
    rep = run_suite(args.suite, args.order, args.shard, args.workers)
    print(rep.to_text())
    if args.json:
        if args.json == "-":
            print(rep.to_json())
        else:
            with open(args.json, "w") as fh:
                fh.write(rep.to_json() + "\n")
    return 0 if rep.passed else 1


COMMANDS = {
    "enumerate": _cmd_enumerate,
    "embed": _cmd_embed,
    "origins": _cmd_origins,
    "catalog": _cmd_catalog,
    "verify": _cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (InvalidArgumentError, ValueError) as exc:
        print(f"tourpaths: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
