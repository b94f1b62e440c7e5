"""Command-line interface.

Subcommands: ``fit``, ``gof``, ``return-levels``, ``report`` (full
pipeline), ``simulate``. Exit codes: 0 success, 1 usage error, 2 data
error, 3 numerical failure (no family converged).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diagnostics import AD_CRITICAL_VALUES, anderson_darling, select_best
from .distributions import FAMILIES, FAMILY_LABELS, params_from_sequence, params_to_dict
from .errors import (
    DegenerateSampleError,
    DomainError,
    EmptyDatasetError,
    EmptyInputError,
    NumericalError,
    ParseError,
)
from .fitting import FitOutcome, fit_all, fit_mle
from .io import load_csv, simulate_to_csv, write_text_atomic
from .pipeline import emit_plot_data, emit_report, fit_outcome_to_dict, run_pipeline
from .returns import DEFAULT_RETURN_PERIODS, ReturnSpec, return_level_table

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3

_DATA_ERRORS = (
    FileNotFoundError,
    IsADirectoryError,
    ParseError,
    EmptyDatasetError,
    DegenerateSampleError,
    DomainError,
    EmptyInputError,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; the contract here is 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _periods_arg(text: str) -> ReturnSpec:
    try:
        values = tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse periods {text!r}") from None
    try:
        return ReturnSpec(values)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _alpha_arg(text: str) -> float:
    try:
        alpha = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse alpha {text!r}") from None
    if not 0.0 < alpha < 1.0:
        raise argparse.ArgumentTypeError("alpha must lie strictly between 0 and 1")
    if alpha not in AD_CRITICAL_VALUES:
        known = ", ".join(str(a) for a in sorted(AD_CRITICAL_VALUES))
        raise argparse.ArgumentTypeError(
            f"no built-in critical value for alpha={alpha} (available: {known})"
        )
    return alpha


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("value must be at least 1")
    return value


def _params_arg(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse parameters {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="evtkit", description="Block-maxima extreme value analysis toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", required=True, help="CSV file: value per line or year,value rows")
        p.add_argument(
            "--columns",
            choices=("auto", "value", "year_value"),
            default="auto",
            help="input column layout (default: auto-detect)",
        )

    def add_dist(p, default="all"):
        p.add_argument("--dist", choices=FAMILIES + ("all",), default=default)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p_fit = sub.add_parser("fit", help="fit distribution parameters by maximum likelihood")
    add_input(p_fit)
    add_dist(p_fit)
    add_format(p_fit)
    p_fit.set_defaults(handler=_cmd_fit)

    p_gof = sub.add_parser("gof", help="Anderson-Darling goodness-of-fit test")
    add_input(p_gof)
    add_dist(p_gof)
    add_format(p_gof)
    p_gof.add_argument("--alpha", type=_alpha_arg, default=0.05)
    p_gof.set_defaults(handler=_cmd_gof)

    p_rl = sub.add_parser("return-levels", help="return levels for fitted families")
    add_input(p_rl)
    add_dist(p_rl)
    add_format(p_rl)
    p_rl.add_argument(
        "--periods",
        type=_periods_arg,
        default=ReturnSpec(DEFAULT_RETURN_PERIODS),
        help="comma-separated return periods in years (default: 5,10,50,100,200)",
    )
    p_rl.set_defaults(handler=_cmd_return_levels)

    p_report = sub.add_parser("report", help="full pipeline: describe, fit, test, return levels")
    add_input(p_report)
    add_format(p_report)
    p_report.add_argument("--alpha", type=_alpha_arg, default=0.05)
    p_report.add_argument(
        "--periods", type=_periods_arg, default=ReturnSpec(DEFAULT_RETURN_PERIODS)
    )
    p_report.add_argument(
        "--out-dir", default=None, help="also write report files and plot-data CSVs here"
    )
    p_report.set_defaults(handler=_cmd_report)

    p_sim = sub.add_parser("simulate", help="write a seeded synthetic sample as CSV")
    p_sim.add_argument("--dist", choices=FAMILIES, required=True)
    p_sim.add_argument(
        "--params",
        type=_params_arg,
        required=True,
        help=(
            "comma-separated parameters: gumbel location,scale; frechet shape,scale[,location]; "
            "weibull shape,scale; gev location,scale,shape"
        ),
    )
    p_sim.add_argument("--n", type=_positive_int, required=True)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--output", required=True)
    p_sim.set_defaults(handler=_cmd_simulate)

    return parser


def _fit_selected(args):
    dataset = load_csv(args.input, columns=args.columns)
    if args.dist == "all":
        return dataset, fit_all(dataset.sample)
    # single family: surface data errors directly
    return dataset, [FitOutcome(args.dist, result=fit_mle(args.dist, dataset.sample))]


def _no_usable_fit(outcomes) -> bool:
    return not any(o.result is not None and o.result.converged for o in outcomes)


def _fit_rows(outcomes):
    return [fit_outcome_to_dict(o) for o in outcomes]


def _print_fit_text(outcomes):
    print(f"{'family':<9}{'location':>10}{'scale':>10}{'shape':>10}{'log-lik':>12}{'converged':>11}")
    for o in outcomes:
        label = FAMILY_LABELS[o.family]
        if o.result is None:
            print(f"{label:<9}ERROR: {o.error}")
            continue
        p = params_to_dict(o.result.params)

        def cell(key):
            return f"{p[key]:.2f}" if key in p else "-"

        print(
            f"{label:<9}{cell('location'):>10}{cell('scale'):>10}{cell('shape'):>10}"
            f"{o.result.log_likelihood:>12.2f}{('yes' if o.result.converged else 'NO'):>11}"
        )


def _cmd_fit(args) -> int:
    dataset, outcomes = _fit_selected(args)
    if args.format == "json":
        print(json.dumps({"dataset": dataset.label, "fits": _fit_rows(outcomes)}, indent=2))
    else:
        _print_fit_text(outcomes)
    return EXIT_NUMERICAL if _no_usable_fit(outcomes) else EXIT_OK


def _cmd_gof(args) -> int:
    dataset, outcomes = _fit_selected(args)
    gofs = [
        anderson_darling(dataset.sample, o.result.params, args.alpha)
        if o.result is not None
        else None
        for o in outcomes
    ]
    if args.format == "json":
        payload = {
            "dataset": dataset.label,
            "fits": _fit_rows(outcomes),
            "gof": [
                None
                if g is None
                else {
                    "family": g.family,
                    "statistic": g.statistic,
                    "alpha": g.alpha,
                    "critical_value": g.critical_value,
                    "passed": g.passed,
                }
                for g in gofs
            ],
        }
        fitted = [g for g in gofs if g is not None]
        payload["best_family"] = select_best(fitted) if fitted else None
        print(json.dumps(payload, indent=2))
    else:
        print(f"{'family':<9}{'statistic':>11}{'critical':>10}{'result':>8}")
        for o, g in zip(outcomes, gofs):
            label = FAMILY_LABELS[o.family]
            if g is None:
                print(f"{label:<9}{'ERROR':>11}{'-':>10}{'-':>8}")
            else:
                print(
                    f"{label:<9}{g.statistic:>11.3f}{g.critical_value:>10.3f}"
                    f"{('PASS' if g.passed else 'FAIL'):>8}"
                )
        fitted = [g for g in gofs if g is not None]
        if len(fitted) > 1:
            print(f"best family: {FAMILY_LABELS[select_best(fitted)]}")
    return EXIT_NUMERICAL if _no_usable_fit(outcomes) else EXIT_OK


def _cmd_return_levels(args) -> int:
    dataset, outcomes = _fit_selected(args)
    tables = {
        o.family: return_level_table(o.result.params, args.periods)
        for o in outcomes
        if o.result is not None
    }
    if not tables:
        raise NumericalError("no distribution family could be fitted")
    if args.format == "json":
        payload = {
            "dataset": dataset.label,
            "return_levels": [
                {
                    "family": family,
                    "entries": [{"period": p, "level": v} for p, v in table.entries],
                }
                for family, table in tables.items()
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        families = list(tables)
        header = f"{'period (yr)':<13}" + "".join(f"{FAMILY_LABELS[f]:>12}" for f in families)
        print(header)
        for i, period in enumerate(args.periods.periods):
            cells = "".join(f"{tables[f].entries[i][1]:>12.2f}" for f in families)
            print(f"{period:<13g}{cells}")
    return EXIT_NUMERICAL if _no_usable_fit(outcomes) else EXIT_OK


def _cmd_report(args) -> int:
    dataset = load_csv(args.input, columns=args.columns)
    report = run_pipeline(dataset, spec=args.periods, alpha=args.alpha)
    print(emit_report(report, args.format), end="")
    if args.out_dir is not None:
        out_dir = Path(args.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        write_text_atomic(out_dir / "report.txt", emit_report(report, "text"))
        write_text_atomic(out_dir / "report.json", emit_report(report, "json") + "\n")
        emit_plot_data(report, dataset, out_dir)
    return EXIT_OK


def _cmd_simulate(args) -> int:
    try:
        dist = params_from_sequence(args.dist, args.params)
    except DomainError as exc:
        print(f"evtkit simulate: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    path = simulate_to_csv(dist, args.n, args.seed, args.output)
    print(path)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _DATA_ERRORS as exc:
        print(f"evtkit: error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NumericalError as exc:
        print(f"evtkit: error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
