"""Descriptive statistics, Anderson-Darling goodness of fit, and fit diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import FAMILIES, Distribution, clamp_probability
from .errors import DegenerateSampleError, DomainError, EmptyInputError
from .sample import Sample

__all__ = [
    "DescriptiveStats",
    "GofResult",
    "QqSeries",
    "DiffSeries",
    "AD_CRITICAL_VALUES",
    "describe",
    "anderson_darling",
    "plotting_positions",
    "qq_series",
    "probability_difference",
    "select_best",
]

# Built-in Anderson-Darling critical values (all-parameters-known case).
# Only the 5% level ships by default; other levels can be supplied through
# the ``critical_values`` argument of :func:`anderson_darling`. The same
# critical value is applied to fits with estimated parameters, a deliberate,
# documented approximation common in applied frequency analysis.
AD_CRITICAL_VALUES = {0.05: 2.502}


@dataclass(frozen=True)
class DescriptiveStats:
    """Summary statistics of a block-maxima sample.

    ``skewness`` is the adjusted Fisher-Pearson estimator and
    ``excess_kurtosis`` the matching bias-adjusted excess estimator; both are
    NaN when the sample is too small to define them (n < 3 resp. n < 4).
    """

    n: int
    range: float
    mean: float
    variance: float
    std_dev: float
    coef_variation_pct: float
    std_error: float
    skewness: float
    excess_kurtosis: float


@dataclass(frozen=True)
class GofResult:
    """One Anderson-Darling test row: statistic vs critical value."""

    family: str
    statistic: float
    alpha: float
    critical_value: float
    passed: bool

    @classmethod
    def from_statistic(
        cls, family: str, statistic: float, alpha: float, critical_value: float
    ) -> "GofResult":
        """Apply the acceptance gate: pass iff statistic < critical value."""
        return cls(
            family=family,
            statistic=float(statistic),
            alpha=float(alpha),
            critical_value=float(critical_value),
            passed=bool(statistic < critical_value),
        )


@dataclass(frozen=True, eq=False)
class QqSeries:
    """Theoretical quantiles vs observed order statistics at positions i/(n+1)."""

    family: str
    positions: np.ndarray
    theoretical: np.ndarray
    observed: np.ndarray


@dataclass(frozen=True, eq=False)
class DiffSeries:
    """Empirical-minus-fitted cumulative probability at each order statistic."""

    family: str
    x: np.ndarray
    diff: np.ndarray


def describe(sample: Sample) -> DescriptiveStats:
    """Descriptive statistics with n-1 variance and bias-adjusted shape estimators."""
    n = sample.n
    if n < 2:
        raise DegenerateSampleError("need at least two observations to describe")
    x = sample.values
    mean = float(np.mean(x))
    variance = float(np.var(x, ddof=1))
    std_dev = math.sqrt(variance)
    std_error = std_dev / math.sqrt(n)
    coef_variation_pct = 100.0 * std_dev / mean if mean != 0.0 else math.nan

    centered = x - mean
    m2 = float(np.mean(centered**2))
    skewness = math.nan
    excess_kurtosis = math.nan
    if m2 > 0.0:
        if n > 2:
            g1 = float(np.mean(centered**3)) / m2**1.5
            skewness = g1 * math.sqrt(n * (n - 1.0)) / (n - 2.0)
        if n > 3:
            g2 = float(np.mean(centered**4)) / m2**2 - 3.0
            excess_kurtosis = ((n + 1.0) * g2 + 6.0) * (n - 1.0) / ((n - 2.0) * (n - 3.0))

    return DescriptiveStats(
        n=n,
        range=float(np.max(x) - np.min(x)),
        mean=mean,
        variance=variance,
        std_dev=std_dev,
        coef_variation_pct=coef_variation_pct,
        std_error=std_error,
        skewness=skewness,
        excess_kurtosis=excess_kurtosis,
    )


def anderson_darling(
    sample: Sample,
    dist: Distribution,
    alpha: float = 0.05,
    critical_values: dict[float, float] | None = None,
) -> GofResult:
    """Anderson-Darling test of ``sample`` against the fitted ``dist``.

    The statistic is
    ``A2 = -n - (1/n) * sum_i (2i-1) * [ln F(x_(i)) + ln(1 - F(x_(n-i+1)))]``
    over the ascending order statistics; cdf values are clamped away from
    0 and 1 before the logarithms, so boundary observations cannot produce
    infinities. The result is invariant to the input ordering.
    """
    table = dict(AD_CRITICAL_VALUES)
    if critical_values:
        table.update(critical_values)
    if alpha not in table:
        raise DomainError(
            f"no critical value for alpha={alpha}; supply one via critical_values"
        )

    n = sample.n
    z = clamp_probability(dist.cdf(sample.sorted_values()))
    z = np.atleast_1d(z)
    coeff = 2.0 * np.arange(1, n + 1) - 1.0
    statistic = -n - float(np.sum(coeff * (np.log(z) + np.log1p(-z[::-1])))) / n
    return GofResult.from_statistic(dist.family, statistic, alpha, table[alpha])


def plotting_positions(n: int) -> np.ndarray:
    """Weibull plotting positions i/(n+1), i = 1..n."""
    return np.arange(1, n + 1) / (n + 1.0)


def qq_series(sample: Sample, dist: Distribution) -> QqSeries:
    """Quantile-quantile series: (quantile at i/(n+1), i-th order statistic)."""
    positions = plotting_positions(sample.n)
    return QqSeries(
        family=dist.family,
        positions=positions,
        theoretical=np.atleast_1d(dist.quantile(positions)),
        observed=sample.sorted_values(),
    )


def probability_difference(sample: Sample, dist: Distribution) -> DiffSeries:
    """Difference series i/(n+1) - F(x_(i)) over the ascending order statistics."""
    x = sample.sorted_values()
    positions = plotting_positions(sample.n)
    return DiffSeries(family=dist.family, x=x, diff=positions - np.atleast_1d(dist.cdf(x)))


def select_best(gofs: list[GofResult]) -> str:
    """Pick the family with the smallest statistic among the passing tests.

    Falls back to the smallest statistic overall when nothing passes; ties
    break by the fixed family order.
    """
    pool = [g for g in gofs if g is not None]
    if not pool:
        raise EmptyInputError("no goodness-of-fit results to select from")

    def rank(g: GofResult):
        order = FAMILIES.index(g.family) if g.family in FAMILIES else len(FAMILIES)
        return (g.statistic, order)

    passing = [g for g in pool if g.passed]
    return min(passing or pool, key=rank).family
