"""Command-line front end.

Subcommands: ``preprocess`` (clean a corpus), ``estimate`` (fill missing
years), ``evaluate`` (K-fold scoring), ``coverage-model`` (analytical
expected coverage), ``synth`` (seeded fixture generation).  Every run
echoes its resolved configuration so outputs are reproducible from their
own header.  Exit codes: 0 ok, 1 runtime failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from .evaluate import (
    SyntheticParams,
    evaluate,
    expected_coverage,
    generate_synthetic,
    project_citation,
    project_coauthor,
    project_combined,
    three_paper_topologies,
)
from .graph import (
    DEFAULT_YEAR_BOUNDS,
    AcademicGraph,
    LoadError,
    load_graph,
    mask,
    preprocess,
    write_graph,
)
from .runner import NETWORK_ALGOS, run_estimator, validate_pair
from .windows import NO_LOWER, NO_UPPER

PROJECTIONS = {
    "citation": project_citation,
    "coauthor": project_coauthor,
    "combined": project_combined,
}


class UsageError(Exception):
    pass


def _add_input_args(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--papers", required=True, help="papers TSV (id<TAB>year)")
    sub.add_argument("--citations", help="citations TSV (cited<TAB>citing)")
    sub.add_argument("--authorships", help="authorships TSV (author<TAB>paper)")
    sub.add_argument("--year-min", type=int, default=DEFAULT_YEAR_BOUNDS[0])
    sub.add_argument("--year-max", type=int, default=DEFAULT_YEAR_BOUNDS[1])


def _load(args: argparse.Namespace) -> AcademicGraph:
    for path in (args.papers, args.citations, args.authorships):
        if path is not None and not Path(path).exists():
            raise UsageError(f"input file not found: {path}")
    graph, report = load_graph(
        args.papers,
        args.citations,
        args.authorships,
        year_bounds=(args.year_min, args.year_max),
    )
    print(f"# load {report.summary()}")
    return graph


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="yearfill",
        description="Estimate missing publication years from citation/authorship graphs.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p_pre = subs.add_parser("preprocess", help="clean a corpus and write it back out")
    _add_input_args(p_pre)
    p_pre.add_argument("--out-dir", required=True)
    p_pre.add_argument(
        "--strip-missing",
        action="store_true",
        help="also drop year-missing papers and their edges (ground-truth prep)",
    )
    p_pre.add_argument("--report", help="write the cleaning report as key=value lines")

    p_est = subs.add_parser("estimate", help="estimate years for missing-year papers")
    _add_input_args(p_est)
    p_est.add_argument("--network", required=True, choices=sorted(NETWORK_ALGOS))
    p_est.add_argument("--algo", required=True)
    p_est.add_argument("--gamma", type=float, default=1.0)
    p_est.add_argument("--out", required=True, help="estimates TSV")

    p_eval = subs.add_parser("evaluate", help="K-fold masking evaluation")
    _add_input_args(p_eval)
    p_eval.add_argument("--network", required=True, choices=sorted(NETWORK_ALGOS))
    p_eval.add_argument("--algo", required=True)
    p_eval.add_argument("--k", type=int, default=5)
    p_eval.add_argument("--seed", type=int, default=0)
    p_eval.add_argument("--gamma", type=float, default=1.0)
    p_eval.add_argument("--jobs", type=int, default=1, help="parallel folds")
    p_eval.add_argument("--out", required=True, help="report CSV")
    p_eval.add_argument("--json", help="also write the full report as JSON")

    p_cov = subs.add_parser("coverage-model", help="analytical expected coverage")
    _add_input_args(p_cov)
    p_cov.add_argument(
        "--projection", default="all", choices=["all", *sorted(PROJECTIONS)]
    )
    p_cov.add_argument(
        "--eta",
        default="0.125,0.2,0.25,0.333,0.5",
        help="comma-separated masking rates in (0,1)",
    )
    p_cov.add_argument("--out", required=True, help="table CSV")

    p_syn = subs.add_parser("synth", help="write a seeded synthetic corpus")
    p_syn.add_argument("--out-dir", required=True)
    p_syn.add_argument("--n-papers", type=int, default=100)
    p_syn.add_argument("--n-authors", type=int, default=60)
    p_syn.add_argument("--mean-citations", type=float, default=2.0)
    p_syn.add_argument("--mean-authors", type=float, default=2.0)
    p_syn.add_argument("--year-min", type=int, default=1990)
    p_syn.add_argument("--year-max", type=int, default=2010)
    p_syn.add_argument("--seed", type=int, default=0)
    p_syn.add_argument(
        "--three-paper-suite",
        action="store_true",
        help="instead write the seven 3-paper citation shapes as case<N>/ dirs",
    )
    return parser


def _cmd_preprocess(args: argparse.Namespace) -> int:
    graph = _load(args)
    print(
        f"# run command=preprocess strip_missing={args.strip_missing} "
        f"year_min={args.year_min} year_max={args.year_max}"
    )
    cleaned, report = preprocess(graph, strip_missing=args.strip_missing)
    write_graph(cleaned, args.out_dir)
    print(f"# preprocess {report.summary()}")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            for item in report.summary().split():
                fh.write(item + "\n")
    return 0


def _fmt_bound(value: float) -> str:
    if value == NO_LOWER:
        return "-inf"
    if value == NO_UPPER:
        return "+inf"
    return str(int(value))


def _cmd_estimate(args: argparse.Namespace) -> int:
    try:
        algo = validate_pair(args.network, args.algo)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    graph = _load(args)
    print(
        f"# run command=estimate network={args.network} algo={algo} "
        f"gamma={args.gamma} year_min={args.year_min} year_max={args.year_max}"
    )
    cleaned, report = preprocess(graph)
    if report.violations:
        print(f"# preprocess {report.summary()}")
    run = run_estimator(mask(cleaned, ()), args.network, algo, gamma=args.gamma)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(f"# run network={args.network} algo={algo} gamma={args.gamma}\n")
        for pid in sorted(run.outcomes):
            win = run.windows[pid]
            year = run.outcomes[pid]
            fh.write(
                f"{pid}\t{'UNCOVERED' if year is None else year}\t"
                f"{_fmt_bound(win.lower)}\t{_fmt_bound(win.upper)}\t{win.kind.value}\n"
            )
    covered = sum(1 for y in run.outcomes.values() if y is not None)
    print(f"# estimate missing={len(run.outcomes)} covered={covered}")
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    try:
        algo = validate_pair(args.network, args.algo)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.k < 2:
        raise UsageError(f"--k must be at least 2, got {args.k}")
    graph = _load(args)
    print(
        f"# run command=evaluate network={args.network} algo={algo} k={args.k} "
        f"seed={args.seed} gamma={args.gamma} jobs={args.jobs} "
        f"year_min={args.year_min} year_max={args.year_max}"
    )
    cleaned, _ = preprocess(graph)
    counters: Counter = Counter()
    report = evaluate(
        cleaned,
        args.network,
        algo,
        k=args.k,
        seed=args.seed,
        gamma=args.gamma,
        jobs=args.jobs,
        counters=counters,
    )
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(report.to_csv())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    mae = "n/a" if report.mae is None else f"{report.mae:.4f}"
    print(f"# evaluate coverage={report.coverage:.4f} mae={mae}")
    if counters:
        print("# counters " + " ".join(f"{k}={v}" for k, v in sorted(counters.items())))
    return 0


def _cmd_coverage_model(args: argparse.Namespace) -> int:
    try:
        etas = [float(tok) for tok in args.eta.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"bad --eta list: {args.eta!r}") from None
    if not etas or any(not 0 < eta < 1 for eta in etas):
        raise UsageError("--eta values must lie strictly between 0 and 1")
    graph = _load(args)
    print(f"# run command=coverage-model projection={args.projection} eta={args.eta}")
    cleaned, _ = preprocess(graph)
    names = sorted(PROJECTIONS) if args.projection == "all" else [args.projection]
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("projection,eta,n_papers,n_components,expected_coverage\n")
        for name in names:
            parts = PROJECTIONS[name](cleaned)
            for eta in etas:
                value = expected_coverage(parts, eta)
                fh.write(f"{name},{eta},{parts.total},{parts.n_components},{value}\n")
    return 0


def _cmd_synth(args: argparse.Namespace) -> int:
    out = Path(args.out_dir)
    if args.three_paper_suite:
        print("# run command=synth suite=three-paper")
        for i, g in enumerate(three_paper_topologies(), start=1):
            write_graph(g, out / f"case{i}")
        return 0
    params = SyntheticParams(
        n_papers=args.n_papers,
        n_authors=args.n_authors,
        mean_citations=args.mean_citations,
        mean_authors=args.mean_authors,
        year_min=args.year_min,
        year_max=args.year_max,
    )
    print(f"# run command=synth seed={args.seed} params={params}")
    write_graph(generate_synthetic(params, args.seed), out)
    return 0


_COMMANDS = {
    "preprocess": _cmd_preprocess,
    "estimate": _cmd_estimate,
    "evaluate": _cmd_evaluate,
    "coverage-model": _cmd_coverage_model,
    "synth": _cmd_synth,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LoadError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
