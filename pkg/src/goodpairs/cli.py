"""Command-line entry point.

Exit codes: 0 success or certificate, 1 no good pair (or a failed check),
2 budget exhausted, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .certificate import GoodPairCertificate, dumps, verify_certificate
from .edgelist import format_edge_list, read_edge_list
from .engine import EngineConfig, certificate_payload, find_good_pair
from .errors import BudgetExhausted
from .graph import GraphError
from .lab import GeneratorSpec, exception_search, generate, many_pairs_experiment, resilience_experiment
from .oracle import OracleBudget, cycle_spectrum

EXIT_OK, EXIT_NONE, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--oracle-cutoff", type=int, default=50)
    common.add_argument("--max-cycles", type=int, default=10**7)
    common.add_argument("--trace", type=Path, help="write the reduction trace as JSON")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = _Parser(prog="goodpairs", description="Find and check pairs of cycles whose lengths differ by 1 or 2.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("find", parents=[common], help="search a graph for a good pair")
    s.add_argument("--input", type=Path, required=True)

    s = sub.add_parser("verify", parents=[common], help="check a certificate against a graph")
    s.add_argument("--input", type=Path, required=True)
    s.add_argument("--certificate", type=Path, required=True)

    s = sub.add_parser("spectrum", parents=[common], help="all simple-cycle lengths")
    s.add_argument("--input", type=Path, required=True)

    s = sub.add_parser("generate", parents=[common], help="write a generated graph as an edge list")
    s.add_argument("--family", required=True,
                   choices=["random_min_degree_3", "random_cubic", "subdivided", "theta", "named"])
    s.add_argument("--n", type=int, default=0)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--params", default="", help="theta path lengths, e.g. 2,2,2")
    s.add_argument("--name", default="")
    s.add_argument("--output", type=Path)

    s = sub.add_parser("resilience", parents=[common], help="cubic graphs with random edges deleted")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--delete", type=int, required=True)
    s.add_argument("--trials", type=int, default=50)

    s = sub.add_parser("many-pairs", parents=[common], help="peel good pairs off random cubic graphs")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trials", type=int, default=1)

    s = sub.add_parser("search-exceptions", parents=[common], help="small graphs without good pairs")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--output-dir", type=Path)
    return p


def _config(args) -> EngineConfig:
    return EngineConfig(oracle_cutoff_n=args.oracle_cutoff, oracle_max_cycles=args.max_cycles,
                        rng_seed=args.seed)


def _print_cert(cert: GoodPairCertificate, out) -> None:
    print(f"lengths {cert.lengths[0]} {cert.lengths[1]}", file=out)
    print(f"delta {cert.length_delta}", file=out)
    print("cycle_a " + " ".join(map(str, cert.cycle_a.vertices)), file=out)
    print("cycle_b " + " ".join(map(str, cert.cycle_b.vertices)), file=out)


def _cmd_find(args, out) -> int:
    g = read_edge_list(args.input)
    try:
        cert, trace = find_good_pair(g, _config(args))
    except BudgetExhausted as exc:
        if args.trace and exc.partial is not None:
            args.trace.write_text(dumps(exc.partial.to_dict()) + "\n", encoding="utf-8")
        print(dumps({"outcome": "budget_exhausted"}) if args.json else "budget_exhausted", file=out)
        return EXIT_BUDGET
    if args.trace:
        args.trace.write_text(dumps(trace.to_dict()) + "\n", encoding="utf-8")
    if args.json:
        print(dumps(certificate_payload(cert, trace)), file=out)
    elif cert is None:
        print("none", file=out)
    else:
        _print_cert(cert, out)
    return EXIT_OK if cert is not None else EXIT_NONE


def _cmd_verify(args, out) -> int:
    g = read_edge_list(args.input)
    try:
        cert = GoodPairCertificate.from_dict(json.loads(args.certificate.read_text(encoding="utf-8")))
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"unreadable certificate: {exc}") from exc
    verdict = verify_certificate(g, cert)
    if args.json:
        print(dumps({"valid": verdict.ok, "reason": verdict.reason}), file=out)
    else:
        print("valid" if verdict.ok else f"invalid {verdict.reason}", file=out)
    return EXIT_OK if verdict.ok else EXIT_NONE


def _cmd_spectrum(args, out) -> int:
    g = read_edge_list(args.input)
    spectrum = cycle_spectrum(g, OracleBudget(args.max_cycles))
    if args.json:
        print(dumps(spectrum.to_dict()), file=out)
    else:
        print(" ".join(map(str, spectrum.lengths)) + ("" if spectrum.exhaustive else " (partial)"), file=out)
    return EXIT_OK if spectrum.exhaustive else EXIT_BUDGET


def _cmd_generate(args, out) -> int:
    try:
        params = tuple(int(x) for x in args.params.split(",") if x.strip())
    except ValueError as exc:
        raise UsageError(f"bad --params {args.params!r}") from exc
    g = generate(GeneratorSpec(args.family, args.n, args.seed, args.k, params, args.name))
    text = format_edge_list(g)
    if args.output:
        args.output.write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return EXIT_OK


def _emit_report(report, args, out) -> int:
    if args.json:
        print(dumps(report.to_dict()), file=out)
    else:
        print(f"{report.name} {json.dumps(report.parameters, sort_keys=True)} seed={report.seed}", file=out)
        for o in report.outcomes:
            print(" ".join(f"{k}={v}" for k, v in o.items()), file=out)
        print(f"successes {report.successes}/{report.trials}", file=out)
    return EXIT_OK if report.successes == report.trials else EXIT_NONE


def _cmd_resilience(args, out) -> int:
    report = resilience_experiment(args.n, args.delete, args.trials, args.seed, _config(args))
    return _emit_report(report, args, out)


def _cmd_many_pairs(args, out) -> int:
    report = many_pairs_experiment(args.n, args.seed, args.trials)
    return _emit_report(report, args, out)


def _cmd_search_exceptions(args, out) -> int:
    res = exception_search(args.k, args.max_n, OracleBudget(args.max_cycles))
    if args.output_dir:
        args.output_dir.mkdir(parents=True, exist_ok=True)
    if args.json:
        print(dumps({"k": res.k, "max_n": res.max_n, "exhaustive": res.exhaustive,
                     "graphs": [[list(e) for e in g.edges()] for g in res.graphs]}), file=out)
    for i, g in enumerate(res.graphs):
        text = format_edge_list(g)
        if args.output_dir:
            (args.output_dir / f"exception_{i:03d}.edges").write_text(text, encoding="utf-8")
        if not args.json:
            print(f"# exception {i}: n={g.n} m={g.m}", file=out)
            out.write(text)
    if not args.json:
        print(f"# {len(res.graphs)} graphs, exhaustive={res.exhaustive}", file=out)
    return EXIT_OK if res.exhaustive else EXIT_BUDGET


COMMANDS = {
    "find": _cmd_find,
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
    "generate": _cmd_generate,
    "resilience": _cmd_resilience,
    "many-pairs": _cmd_many_pairs,
    "search-exceptions": _cmd_search_exceptions,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
    except (GraphError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=err)
    return EXIT_USAGE


def main() -> None:
    sys.exit(run())
