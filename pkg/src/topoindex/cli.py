"""Command-line front end: ``topoindex {compute,verify,product,enumerate}``.

Exit codes: 0 on success, 1 when a check or a formula/direct comparison
fails, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import difflib
import json
import logging
import os
import sys
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Callable, Sequence

from . import generators as gen
from . import verify
from .errors import IndexOverflow, TopoIndexError
from .extremal import OBJECTIVES, extremal_search
from .formats import read_graph6, read_graph_file
from .graph import Graph, require_connected
from .indices import CSV_FIELDS, compute_indices
from .products import (
    ProductFactors,
    cartesian_product_all,
    piv_product_formula,
    piw_nfold_formula,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SPEC_HELP = """\
graph specs (name[:param[,param]...]):
  path:N  cycle:N  star:N  complete:N  turan:N:R  kpartite:A,B,...
  petersen  g6:<graph6 string>
anything else is read as a file: an edge list ("n m" header, then "u v"
lines) or one graph6 string per line.
"""


class SpecError(TopoIndexError):
    pass


def _ints(params: str, name: str) -> list[int]:
    try:
        return [int(p) for p in params.replace(":", ",").split(",") if p != ""]
    except ValueError:
        raise SpecError(f"{name}: parameters must be integers, got {params!r}") from None


def _arity(name: str, k: int, build: Callable[..., Graph]) -> Callable[[str], Graph]:
    def make(params: str) -> Graph:
        args = _ints(params, name)
        if len(args) != k:
            raise SpecError(f"{name} takes {k} integer parameter(s), got {len(args)}")
        return build(*args)
    return make


def _kpartite(params: str) -> Graph:
    parts = _ints(params, "kpartite")
    if not parts:
        raise SpecError("kpartite needs part sizes, e.g. kpartite:3,3,3")
    return gen.complete_multipartite(parts)


def _petersen(params: str) -> Graph:
    if params:
        raise SpecError("petersen takes no parameters")
    return gen.petersen()


GENERATORS: dict[str, Callable[[str], Graph]] = {
    "path": _arity("path", 1, gen.path),
    "cycle": _arity("cycle", 1, gen.cycle),
    "star": _arity("star", 1, gen.star),
    "complete": _arity("complete", 1, gen.complete),
    "turan": _arity("turan", 2, gen.turan),
    "kpartite": _kpartite,
    "petersen": _petersen,
    "g6": lambda s: read_graph6(s),
}


def resolve_spec(spec: str) -> list[Graph]:
    """Graphs named by one command-line spec (a file may hold several)."""
    name, _, params = spec.partition(":")
    if name in GENERATORS:
        graphs = [GENERATORS[name](params)]
    elif os.path.exists(spec):
        with open(spec) as fh:
            graphs = read_graph_file(fh)
    else:
        close = difflib.get_close_matches(name, GENERATORS, n=3)
        hint = f"; did you mean {', '.join(close)}?" if close else f"; known: {', '.join(GENERATORS)}"
        raise SpecError(f"unknown generator or missing file {spec!r}{hint}")
    for g in graphs:
        require_connected(g)
    return graphs


@dataclass
class RunManifest:
    subcommand: str
    inputs: list[str] = field(default_factory=list)
    format: str = "json"
    seed: int | None = None
    timestamp: str = field(default_factory=lambda: datetime.now(timezone.utc).isoformat())

    def write(self, path: str) -> None:
        with open(path, "w") as fh:
            json.dump(asdict(self), fh, indent=2)
            fh.write("\n")


def _err(msg: str) -> None:
    print(f"topoindex: {msg}", file=sys.stderr)


# -- subcommands -----------------------------------------------------------

def cmd_compute(args, out) -> int:
    status = EXIT_OK
    if args.format == "csv":
        out.write("input," + ",".join(CSV_FIELDS) + "\n")
    for spec in args.inputs:
        try:
            graphs = resolve_spec(spec)
            reports = [compute_indices(g) for g in graphs]
        except (TopoIndexError, IndexOverflow, OSError) as exc:
            _err(f"{spec}: {exc}")
            status = EXIT_USAGE
            continue
        for i, r in enumerate(reports):
            ident = spec if len(reports) == 1 else f"{spec}#{i + 1}"
            if args.format == "csv":
                out.write(",".join(str(v) for v in [ident, *r.csv_row()]) + "\n")
            else:
                out.write(json.dumps({"input": ident, **r.to_dict()}) + "\n")
    return status


def cmd_verify(args, out) -> int:
    if args.n_max < 1 or args.n_max > 8:
        _err("--n-max must be between 1 and 8")
        return EXIT_USAGE
    if args.samples < 1 or args.random_graphs < 0:
        _err("--samples must be positive and --random-graphs nonnegative")
        return EXIT_USAGE
    results = verify.run(args.scope, n_max=args.n_max, samples=args.samples,
                         seed=args.seed, random_graphs=args.random_graphs)
    payload = [{"seed": args.seed, **r.to_dict()} for r in results]
    out.write(json.dumps(payload, indent=1) + "\n")
    passed = sum(r.passed for r in results)
    if passed == len(results):
        out.write(f"PASS {passed}/{len(results)}\n")
        return EXIT_OK
    out.write(f"FAIL {passed}/{len(results)}\n")
    first = next((r for r in results if not r.passed), None)
    bad = next((r for r in results if not r.passed and r.counterexample), first)
    out.write(f"counterexample {bad.name} {bad.counterexample or '-'}\n")
    return EXIT_FAIL


def cmd_product(args, out) -> int:
    graphs = []
    for spec in args.factors:
        try:
            found = resolve_spec(spec)
        except (TopoIndexError, OSError) as exc:
            _err(f"{spec}: {exc}")
            return EXIT_USAGE
        if len(found) != 1:
            _err(f"{spec}: a factor must be a single graph, found {len(found)}")
            return EXIT_USAGE
        graphs.append(found[0])
    try:
        factors = ProductFactors.of(graphs)
        formula_w = piw_nfold_formula(factors)
        formula_v = piv_product_formula(factors)
        direct = compute_indices(cartesian_product_all(graphs))
    except IndexOverflow as exc:
        _err(f"overflow: {exc}")
        return EXIT_FAIL
    match = formula_w == direct.pi_w and formula_v == direct.pi_v
    report = {
        "factors": [{"input": s, **inv._asdict()} for s, inv in zip(args.factors, factors.invariants)],
        "pi_w": {"formula": formula_w, "direct": direct.pi_w},
        "pi_v": {"formula": formula_v, "direct": direct.pi_v},
        "formula": formula_w,
        "direct": direct.pi_w,
        "match": match,
    }
    out.write(json.dumps(report) + "\n")
    return EXIT_OK if match else EXIT_FAIL


def cmd_enumerate(args, out) -> int:
    if args.n is None and args.input is None:
        _err("enumerate needs -n or --input")
        return EXIT_USAGE
    try:
        result = extremal_search(args.n, args.objective, dedupe=args.dedupe, source=args.input)
    except (TopoIndexError, OSError) as exc:
        _err(str(exc))
        return EXIT_USAGE
    out.write(result.to_json() + "\n")
    return EXIT_OK


# -- parser ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topoindex",
        description="Exact PI_w and related indices, bound certification, products, extremal search.",
        epilog=SPEC_HELP + "\nTOPOINDEX_THREADS caps worker threads. Exit codes: 0 pass, 1 failure, 2 usage.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--manifest", metavar="PATH", help="write a run manifest (JSON) to PATH")
    parser.add_argument("-v", "--verbose", action="store_true", help="log warnings to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, help=help_text, epilog=SPEC_HELP,
                              formatter_class=argparse.RawDescriptionHelpFormatter)

    p = add("compute", "index report per input graph (NDJSON or CSV)")
    p.add_argument("inputs", nargs="+", metavar="SPEC")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_compute)

    p = add("verify", "run verification suites")
    p.add_argument("scope", choices=verify.SCOPES)
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--random-graphs", type=int, default=10_000)
    p.set_defaults(func=cmd_verify)

    p = add("product", "Cartesian product: formula vs direct PI_w")
    p.add_argument("factors", nargs="+", metavar="SPEC")
    p.set_defaults(func=cmd_product)

    p = add("enumerate", "exact extremal values over connected graphs")
    p.add_argument("-n", "--n", type=int)
    p.add_argument("--dedupe", action="store_true", help="one graph per isomorphism class")
    p.add_argument("--objective", choices=sorted(OBJECTIVES), default="pi_w")
    p.add_argument("--input", metavar="FILE", help="graph6 file instead of internal enumeration")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR,
                        format="%(levelname)s %(message)s")
    if args.command == "product" and len(args.factors) < 2:
        parser.error("product needs at least two factors")
    if args.manifest:
        inputs = getattr(args, "inputs", None) or getattr(args, "factors", None) or []
        if getattr(args, "input", None):
            inputs = [args.input]
        RunManifest(args.command, list(inputs), getattr(args, "format", "json"),
                    getattr(args, "seed", None)).write(args.manifest)
    return args.func(args, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
