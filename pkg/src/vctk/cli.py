"""Command-line surface: catalog, moves, convert, verify, orbit, ll-degree, serve.

All output is canonical JSON (sorted keys, compact, big integers as decimal
strings) or DOT text, so runs are byte-reproducible under a fixed --seed.
Exit codes: 0 success, 1 verification failure, 2 budget or cap exceeded,
64 usage error, 65 bad input data.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .catalog import catalog_entry, ll_degree, stored_constant, stored_constants
from .diagram import DiagramGraph
from .errors import InputError
from .jsonio import canonical_dumps, loads
from .moves import DistinguishedBasis, parse_word
from .orbits import braid_orbit, diagram_stats
from .seifert import (
    SeifertMatrix,
    intersection_from_seifert,
    matrix_from_json_dict,
    matrix_to_json_dict,
    monodromy_from_seifert,
    seifert_from_intersection,
    seifert_from_monodromy,
)
from .suites import run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CAP_EXCEEDED = 2
EXIT_USAGE = 64
EXIT_BAD_DATA = 65


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vctk", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="emit a named catalog entry")
    p.add_argument("name")
    p.add_argument("--n", type=int, default=2, help="fiber dimension (default 2)")
    p.add_argument("--dot", action="store_true", help="emit the diagram as DOT instead of JSON")

    p = sub.add_parser("moves", help="apply a move word to a basis")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--basis", help="path to a basis JSON file")
    src.add_argument("--catalog", help="catalog entry name to start from")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--word", required=True, help='move word, e.g. "a1 b2 k3 wa1:2"')

    p = sub.add_parser("convert", help="convert among intersection/seifert/monodromy")
    p.add_argument("--to", required=True, choices=["seifert", "intersection", "monodromy"])
    p.add_argument("--n", type=int, help="fiber dimension for bare matrices")
    p.add_argument("--from", dest="from_kind", choices=["intersection", "seifert", "monodromy"],
                   help="kind of a bare input matrix (default intersection)")
    p.add_argument("--in", dest="infile", help="input file (default stdin)")

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=["slh", "braid", "traces", "tensor", "stab", "radicals", "vanishing"])
    p.add_argument("--random", type=int, default=None, help="sample count for randomized suites")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("orbit", help="close a basis under the a/b/k moves")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--basis", help="path to a basis JSON file")
    src.add_argument("--catalog", help="catalog entry name to start from")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--budget", type=int, default=None,
                   help="node budget (default VCTK_BUDGET or 100000)")
    p.add_argument("--emit-diagrams", metavar="DIR", help="write one DOT file per distinct diagram")
    p.add_argument("--stats", action="store_true", help="include diagram statistics")

    p = sub.add_parser("ll-degree", help="critical-value covering degree of an A/D/E type")
    p.add_argument("type")

    p = sub.add_parser("constant", help="look up a stored reference constant")
    p.add_argument("name", nargs="?", help="omit to list all known constants")

    p = sub.add_parser("serve", help="run the JSON-over-HTTP session service")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--snapshot-dir", help="persist each session to a JSON file in this directory")

    return parser


def _emit(obj) -> None:
    print(canonical_dumps(obj))


def _load_json_file(path: str | None):
    text = sys.stdin.read() if path in (None, "-") else Path(path).read_text()
    return loads(text)


def _load_basis(args) -> DistinguishedBasis:
    if args.catalog:
        return catalog_entry(args.catalog, n=args.n).basis
    return DistinguishedBasis.from_json_dict(_load_json_file(args.basis))


def _cmd_catalog(args) -> int:
    entry = catalog_entry(args.name, n=args.n)
    if args.dot:
        sys.stdout.write(entry.diagram().to_dot(entry.name))
        return EXIT_OK
    _emit({
        "name": entry.name,
        "lattice": entry.lattice.to_json_dict(),
        "basis": entry.basis.to_json_dict(),
        "diagram": entry.diagram().to_json_dict(),
        "provenance": entry.provenance,
        "constants": entry.constants,
    })
    return EXIT_OK


def _cmd_moves(args) -> int:
    basis = _load_basis(args)
    result = basis.apply_word(parse_word(args.word))
    _emit({
        "basis": result.to_json_dict(),
        "gram": [list(r) for r in result.gram()],
    })
    return EXIT_OK


def _as_seifert(kind: str, n: int, entries) -> SeifertMatrix:
    if kind == "seifert":
        return SeifertMatrix(n, entries)
    if kind == "intersection":
        return seifert_from_intersection(entries, n)
    return seifert_from_monodromy(entries, n)


def _cmd_convert(args) -> int:
    data = _load_json_file(args.infile)
    if isinstance(data, dict):
        kind, n, entries = matrix_from_json_dict(data)
        if args.n is not None and args.n != n:
            raise InputError(f"--n {args.n} contradicts the file's n={n}")
    else:
        from .jsonio import int_rows

        if args.n is None:
            raise InputError("bare matrices need --n")
        kind, n, entries = (args.from_kind or "intersection"), args.n, int_rows(data)
    seifert = _as_seifert(kind, n, entries)
    if args.to == "seifert":
        out = seifert.entries
    elif args.to == "intersection":
        out = intersection_from_seifert(seifert)
    else:
        out = monodromy_from_seifert(seifert)
    _emit(matrix_to_json_dict(args.to, n, out))
    return EXIT_OK


def _cmd_verify(args) -> int:
    report = run_suite(args.suite, count=args.random, seed=args.seed)
    _emit(report.to_json_dict())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _cmd_orbit(args) -> int:
    basis = _load_basis(args)
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get("VCTK_BUDGET", "100000"))
    report = braid_orbit(basis, budget=budget)
    payload = report.to_json_dict()
    if args.stats:
        payload["stats"] = diagram_stats(report, n=basis.lattice.n).to_json_dict()
    if args.emit_diagrams:
        outdir = Path(args.emit_diagrams)
        outdir.mkdir(parents=True, exist_ok=True)
        for idx, gram in enumerate(sorted(report.diagrams)):
            graph = DiagramGraph.from_intersection(gram, basis.lattice.n)
            (outdir / f"diagram_{idx:04d}.dot").write_text(graph.to_dot(f"diagram_{idx:04d}"))
        payload["diagram_files"] = report.diagram_count
    _emit(payload)
    return EXIT_OK if report.complete else EXIT_CAP_EXCEEDED


def _cmd_ll_degree(args) -> int:
    _emit({"type": args.type, "degree": ll_degree(args.type)})
    return EXIT_OK


def _cmd_constant(args) -> int:
    if args.name is None:
        table = stored_constants()
        _emit({k: {"value": v.value, "provenance": v.provenance} for k, v in table.items()})
    else:
        _emit({"name": args.name, "value": stored_constant(args.name)})
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .service import serve_forever

    serve_forever(host=args.host, port=args.port, snapshot_dir=args.snapshot_dir)
    return EXIT_OK


_COMMANDS = {
    "catalog": _cmd_catalog,
    "moves": _cmd_moves,
    "convert": _cmd_convert,
    "verify": _cmd_verify,
    "orbit": _cmd_orbit,
    "ll-degree": _cmd_ll_degree,
    "constant": _cmd_constant,
    "serve": _cmd_serve,
}


def cli_run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"vctk: {exc}", file=sys.stderr)
        return EXIT_BAD_DATA
    except FileNotFoundError as exc:
        print(f"vctk: {exc}", file=sys.stderr)
        return EXIT_BAD_DATA


def main() -> None:
    raise SystemExit(cli_run(sys.argv[1:]))


if __name__ == "__main__":
    main()
