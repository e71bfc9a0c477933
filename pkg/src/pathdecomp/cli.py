"""Command line interface.

Exit codes: 0 success, 1 bound or verification failure, 2 malformed input,
3 theorem hypothesis not satisfied, 4 heuristic and exact search both
missed the triangle-free bound.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .decomposition import (
    CFZ_ALPHA_BETA,
    THREE_FIFTHS_N,
    bound_check,
    certificate,
    paths_from_certificate,
    verify_paths,
)
from .edgelist import format_edge_list, read_edge_list
from .errors import (
    BoundViolated,
    HypothesisNotSatisfied,
    InfeasibleSpec,
    MalformedInput,
    OracleBoundMiss,
    PathDecompError,
    PreconditionViolated,
)
from .generators import FAMILIES, GenSpec, generate
from .harness import decompose_graph, rows_to_csv, run_bench
from .solver import SolverBudget, exact_min_decomposition

EXIT_OK, EXIT_BOUND, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_ORACLE = 0, 1, 2, 3, 4

BOUND_KINDS = {"3n5": THREE_FIFTHS_N, "cfz": CFZ_ALPHA_BETA, "none": None}

log = logging.getLogger("pathdecomp")


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(prog="pathdecomp", description="Path decompositions within 3n/5 paths.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def common(p, inp=True):
        if inp:
            p.add_argument("--input", required=True, type=Path, help="edge list file")
        p.add_argument("--output", type=Path, help="write result here instead of stdout")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget-ms", type=int, default=None)

    p = sub.add_parser("decompose", help="run the pipeline and write a certificate")
    common(p)
    p.add_argument("--bound", choices=sorted(BOUND_KINDS), default="3n5")

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("--input", required=True, type=Path)
    p.add_argument("certificate", type=Path)
    p.add_argument("--bound", choices=sorted(BOUND_KINDS), default=None)

    p = sub.add_parser("exact", help="minimum path decomposition by exhaustive search")
    common(p)

    p = sub.add_parser("gen", help="write a generated instance as an edge list")
    common(p, inp=False)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("params", nargs="*", help="size parameters as key=value, e.g. n=40 t=3")

    p = sub.add_parser("bench", help="batch run over consecutive seeds, CSV output")
    common(p, inp=False)
    p.add_argument("--family", choices=FAMILIES, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("params", nargs="*", help="size parameters as key=value")
    return parser


def _parse_params(items: list[str]) -> dict:
    params = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise _UsageError(f"expected key=value, got {item!r}")
        if key == "lengths":
            params[key] = [int(x) for x in value.split(",")]
            continue
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


_KNOWN_PARAMS = {
    "disjoint_triangles": {"k"},
    "flower": {"q", "lengths"},
    "spaced_triangle_eulerian": {"n", "t"},
    "triangle_free_eulerian": {"n"},
}


def _emit(text: str, target: Path | None) -> None:
    if target is None:
        sys.stdout.write(text)
    else:
        target.write_text(text)


def _budget(args) -> SolverBudget | None:
    return SolverBudget(time_limit_ms=args.budget_ms) if args.budget_ms else None


def _cmd_decompose(args) -> int:
    g = read_edge_list(args.input)
    d, ledger = decompose_graph(g, _budget(args), args.seed)
    kind = BOUND_KINDS[args.bound]
    report = bound_check(g, d, kind) if kind else None
    cert = certificate(g, d, report, ledger)
    _emit(json.dumps(cert, indent=2) + "\n", args.output)
    return EXIT_OK if report is None or report.passed else EXIT_BOUND


def _cmd_verify(args) -> int:
    g = read_edge_list(args.input)
    try:
        cert = json.loads(args.certificate.read_text())
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"certificate is not JSON: {exc}") from exc
    if not isinstance(cert, dict) or not isinstance(cert.get("paths"), list):
        raise MalformedInput("certificate lacks a 'paths' list")
    problems = []
    if cert.get("n") not in (None, g.n) or cert.get("m") not in (None, g.m):
        problems.append(f"certificate declares n={cert.get('n')}, m={cert.get('m')}; graph has n={g.n}, m={g.m}")
    paths = paths_from_certificate(g, cert)
    report = verify_paths(g, paths, exhaustive=True)
    problems += report.violations
    if not problems:
        stated = cert.get("bound") or {}
        kind = BOUND_KINDS[args.bound] if args.bound else stated.get("kind")
        if kind:
            b = bound_check(g, paths, kind)
            if not b.passed:
                problems.append(f"{b.achieved} paths exceed the {kind} bound {b.allowed}")
            elif stated and stated.get("kind") == kind and stated.get("achieved") != b.achieved:
                problems.append(f"certificate claims {stated.get('achieved')} paths, found {b.achieved}")
    for line in problems:
        print(line, file=sys.stderr)
    if problems:
        return EXIT_BOUND
    print("ok")
    return EXIT_OK


def _cmd_exact(args) -> int:
    g = read_edge_list(args.input)
    d, optimal = exact_min_decomposition(g, _budget(args))
    cert = certificate(g, d, None)
    cert["optimal"] = optimal
    _emit(json.dumps(cert, indent=2) + "\n", args.output)
    return EXIT_OK


def _check_params(family, params: dict) -> dict:
    unknown = set(params) - _KNOWN_PARAMS[family]
    if unknown:
        raise _UsageError(f"unknown parameters for {family}: {sorted(unknown)}")
    return params


def _cmd_gen(args) -> int:
    g = generate(GenSpec(args.family, _check_params(args.family, _parse_params(args.params)), args.seed))
    _emit(f"# family={args.family} seed={args.seed}\n" + format_edge_list(g), args.output)
    return EXIT_OK


def _cmd_bench(args) -> int:
    raw = _parse_params(args.params)
    family = args.family or raw.pop("family", None)
    raw.pop("family", None)
    count = args.count if args.count is not None else raw.pop("seeds", 1)
    raw.pop("seeds", None)
    if family not in FAMILIES:
        raise _UsageError(f"bench needs a family from {FAMILIES}")
    params = _check_params(family, raw)
    rows = run_bench(family, params, range(args.seed, args.seed + int(count)), args.budget_ms)
    _emit(rows_to_csv(rows), args.output)
    return EXIT_OK if all(r.passed for r in rows) else EXIT_BOUND


_COMMANDS = {
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "exact": _cmd_exact,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def run_cli(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (MalformedInput, InfeasibleSpec, PreconditionViolated, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesisNotSatisfied as exc:
        print(f"hypothesis not satisfied: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except OracleBoundMiss as exc:
        print(f"oracle bound miss: {exc}", file=sys.stderr)
        return EXIT_ORACLE
    except BoundViolated as exc:
        print(f"bound violated: {exc}", file=sys.stderr)
        if exc.ledger is not None:
            print(json.dumps(exc.ledger.to_dict(), indent=2), file=sys.stderr)
        return EXIT_BOUND
    except PathDecompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
