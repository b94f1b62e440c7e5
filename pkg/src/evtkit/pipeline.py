"""End-to-end analysis pipeline: describe, fit, test, select, return levels."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .diagnostics import (
    DescriptiveStats,
    GofResult,
    anderson_darling,
    describe,
    probability_difference,
    qq_series,
    select_best,
)
from .distributions import FAMILY_LABELS, Distribution, params_from_dict, params_to_dict
from .errors import NumericalError, UnsupportedFormatError
from .fitting import DEFAULT_CONFIG, FitOutcome, FitResult, OptimizerConfig, fit_all
from .io import Dataset, write_csv
from .returns import ReturnLevelTable, ReturnSpec, return_curve, return_level_table

__all__ = [
    "AnalysisReport",
    "run_pipeline",
    "emit_report",
    "emit_plot_data",
    "report_to_dict",
    "report_from_dict",
    "fit_outcome_to_dict",
    "REPORT_FORMATS",
]

REPORT_FORMATS = ("text", "json")

PDF_GRID_POINTS = 512
PDF_GRID_MARGIN = 0.1  # fraction of the data range padded on each side
RETURN_CURVE_POINTS = 256
RETURN_CURVE_MIN_PERIOD = 1.1


@dataclass(frozen=True)
class AnalysisReport:
    """Aggregated pipeline output; fits and gof rows are aligned by family."""

    descriptive: DescriptiveStats
    fits: tuple[FitOutcome, ...]
    gofs: tuple[GofResult | None, ...]
    best_family: str
    return_levels: ReturnLevelTable


def run_pipeline(
    dataset: Dataset,
    spec: ReturnSpec | None = None,
    alpha: float = 0.05,
    config: OptimizerConfig = DEFAULT_CONFIG,
    critical_values: dict[float, float] | None = None,
) -> AnalysisReport:
    """Full deterministic analysis of one dataset.

    Fits all four families, tests each successful fit with the
    Anderson-Darling statistic, selects the best family, and computes its
    return-level table. Per-family failures are recorded in the report.

    Raises
    ------
    NumericalError
        No family could be fitted, or none of the fits converged.
    """
    spec = spec or ReturnSpec()
    descriptive = describe(dataset.sample)
    fits = tuple(fit_all(dataset.sample, config))
    gofs = tuple(
        anderson_darling(dataset.sample, fit.result.params, alpha, critical_values)
        if fit.result is not None
        else None
        for fit in fits
    )
    fitted = [g for g in gofs if g is not None]
    if not fitted:
        raise NumericalError("no distribution family could be fitted")
    if not any(fit.result.converged for fit in fits if fit.result is not None):
        raise NumericalError("no distribution family converged")
    best_family = select_best(fitted)
    best_params = _params_for(fits, best_family)
    return AnalysisReport(
        descriptive=descriptive,
        fits=fits,
        gofs=gofs,
        best_family=best_family,
        return_levels=return_level_table(best_params, spec),
    )


def _params_for(fits: tuple[FitOutcome, ...], family: str) -> Distribution:
    for fit in fits:
        if fit.family == family and fit.result is not None:
            return fit.result.params
    raise NumericalError(f"no fitted parameters for family {family!r}")


# --- serialization ---------------------------------------------------------


def report_to_dict(report: AnalysisReport) -> dict:
    """Plain-dict form of a report (stable field names, full precision)."""
    return {
        "descriptive": dataclasses.asdict(report.descriptive),
        "fits": [fit_outcome_to_dict(fit) for fit in report.fits],
        "gof": [None if g is None else dataclasses.asdict(g) for g in report.gofs],
        "best_family": report.best_family,
        "return_levels": [
            {"period": period, "level": level}
            for period, level in report.return_levels.entries
        ],
    }


def fit_outcome_to_dict(fit: FitOutcome) -> dict:
    """Plain-dict form of one per-family fit entry."""
    if fit.result is None:
        return {"family": fit.family, "error": fit.error, "fit": None}
    result = fit.result
    return {
        "family": fit.family,
        "error": None,
        "fit": {
            "params": params_to_dict(result.params),
            "log_likelihood": result.log_likelihood,
            "converged": result.converged,
            "iterations": result.iterations,
            "initial_params": params_to_dict(result.initial_params),
        },
    }


def report_from_dict(data: dict) -> AnalysisReport:
    """Rebuild a report from :func:`report_to_dict` output (exact round trip)."""
    return AnalysisReport(
        descriptive=DescriptiveStats(**data["descriptive"]),
        fits=tuple(_fit_from_dict(entry) for entry in data["fits"]),
        gofs=tuple(None if g is None else GofResult(**g) for g in data["gof"]),
        best_family=data["best_family"],
        return_levels=ReturnLevelTable(
            entries=tuple(
                (float(row["period"]), float(row["level"]))
                for row in data["return_levels"]
            )
        ),
    )


def _fit_from_dict(entry: dict) -> FitOutcome:
    if entry.get("fit") is None:
        return FitOutcome(family=entry["family"], error=entry.get("error"))
    payload = entry["fit"]
    result = FitResult(
        params=params_from_dict(payload["params"]),
        log_likelihood=float(payload["log_likelihood"]),
        converged=bool(payload["converged"]),
        iterations=int(payload["iterations"]),
        initial_params=params_from_dict(payload["initial_params"]),
    )
    return FitOutcome(family=entry["family"], result=result)


# --- report formatting ------------------------------------------------------


def emit_report(report: AnalysisReport, fmt: str = "text") -> str:
    """Render a report as human-readable text or a machine-readable JSON document.

    Raises
    ------
    UnsupportedFormatError
        Unknown ``fmt``.
    """
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2)
    if fmt == "text":
        return _text_report(report)
    raise UnsupportedFormatError(f"unknown report format {fmt!r}; expected one of {REPORT_FORMATS}")


def _fmt(value: float | None, nd: int = 2) -> str:
    if value is None:
        return "-"
    return f"{value:.{nd}f}"


def _text_report(report: AnalysisReport) -> str:
    lines: list[str] = []
    d = report.descriptive
    lines.append("Block-maxima extreme value analysis")
    lines.append("===================================")
    lines.append("")
    lines.append("Descriptive statistics")
    lines.append("----------------------")
    for name, value in [
        ("sample size", d.n),
        ("range", _fmt(d.range)),
        ("mean", _fmt(d.mean)),
        ("variance", _fmt(d.variance)),
        ("std deviation", _fmt(d.std_dev)),
        ("coef of variation %", _fmt(d.coef_variation_pct)),
        ("std error", _fmt(d.std_error)),
        ("skewness", _fmt(d.skewness, 3)),
        ("excess kurtosis", _fmt(d.excess_kurtosis, 3)),
    ]:
        lines.append(f"  {name:<22}{value:>12}")
    lines.append("")

    lines.append("Fitted parameters (maximum likelihood)")
    lines.append("--------------------------------------")
    header = f"  {'family':<9}{'location':>10}{'scale':>10}{'shape':>10}{'log-lik':>12}{'converged':>11}"
    lines.append(header)
    for fit in report.fits:
        label = FAMILY_LABELS.get(fit.family, fit.family)
        if fit.result is None:
            lines.append(f"  {label:<9}ERROR: {fit.error}")
            continue
        p = params_to_dict(fit.result.params)
        lines.append(
            f"  {label:<9}"
            f"{_fmt(p.get('location')):>10}"
            f"{_fmt(p.get('scale')):>10}"
            f"{_fmt(p.get('shape')):>10}"
            f"{_fmt(fit.result.log_likelihood):>12}"
            f"{('yes' if fit.result.converged else 'NO'):>11}"
        )
    lines.append("")

    alpha = next((g.alpha for g in report.gofs if g is not None), 0.05)
    lines.append(f"Goodness of fit (Anderson-Darling, alpha = {alpha:g})")
    lines.append("-----------------------------------------------")
    lines.append(f"  {'family':<9}{'statistic':>11}{'critical':>10}{'result':>8}")
    for fit, gof in zip(report.fits, report.gofs):
        label = FAMILY_LABELS.get(fit.family, fit.family)
        if gof is None:
            lines.append(f"  {label:<9}{'ERROR':>11}{'-':>10}{'-':>8}")
            continue
        verdict = "PASS" if gof.passed else "FAIL"
        lines.append(
            f"  {label:<9}{_fmt(gof.statistic, 3):>11}{_fmt(gof.critical_value, 3):>10}{verdict:>8}"
        )
    lines.append("")

    best_label = FAMILY_LABELS.get(report.best_family, report.best_family)
    lines.append(f"Best family: {best_label}")
    lines.append("")
    lines.append(f"Return levels ({best_label})")
    lines.append("-" * (15 + len(best_label) + 1))
    lines.append(f"  {'period (yr)':<13}{'level':>10}")
    for period, level in report.return_levels.entries:
        lines.append(f"  {period:<13g}{_fmt(level):>10}")
    return "\n".join(lines) + "\n"


# --- plot data --------------------------------------------------------------


def emit_plot_data(report: AnalysisReport, dataset: Dataset, out_dir) -> dict[str, Path]:
    """Write plot-ready CSV series and return the written paths by name.

    Files: ``timeseries.csv`` (year,value), per fitted family
    ``pdf_<family>.csv`` (x,pdf over a data-spanning grid),
    ``qq_<family>.csv`` (p,theoretical,observed) and
    ``prob_diff_<family>.csv`` (x,diff), plus ``return_curve.csv``
    (period,level) for the best family.
    """
    out_dir = Path(out_dir)
    written: dict[str, Path] = {}

    x = dataset.sample.values
    years = dataset.years if dataset.years is not None else tuple(range(1, dataset.sample.n + 1))
    written["timeseries"] = write_csv(
        out_dir / "timeseries.csv",
        "year,value",
        ((year, float(value)) for year, value in zip(years, x)),
    )

    lo, hi = float(np.min(x)), float(np.max(x))
    margin = PDF_GRID_MARGIN * (hi - lo)
    grid = np.linspace(lo - margin, hi + margin, PDF_GRID_POINTS)
    for fit in report.fits:
        if fit.result is None:
            continue
        dist = fit.result.params
        density = np.atleast_1d(dist.pdf(grid))
        written[f"pdf_{fit.family}"] = write_csv(
            out_dir / f"pdf_{fit.family}.csv",
            "x,pdf",
            ((float(a), float(b)) for a, b in zip(grid, density)),
        )
        qq = qq_series(dataset.sample, dist)
        written[f"qq_{fit.family}"] = write_csv(
            out_dir / f"qq_{fit.family}.csv",
            "p,theoretical,observed",
            (
                (float(p), float(t), float(o))
                for p, t, o in zip(qq.positions, qq.theoretical, qq.observed)
            ),
        )
        diff = probability_difference(dataset.sample, dist)
        written[f"prob_diff_{fit.family}"] = write_csv(
            out_dir / f"prob_diff_{fit.family}.csv",
            "x,diff",
            ((float(a), float(b)) for a, b in zip(diff.x, diff.diff)),
        )

    best_params = _params_for(report.fits, report.best_family)
    p_max = max(report.return_levels.periods)
    p_min = RETURN_CURVE_MIN_PERIOD if p_max > RETURN_CURVE_MIN_PERIOD else (1.0 + p_max) / 2.0
    curve = return_curve(best_params, p_min, p_max, RETURN_CURVE_POINTS)
    written["return_curve"] = write_csv(out_dir / "return_curve.csv", "period,level", curve)
    return written
