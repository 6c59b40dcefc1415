"""Sample statistics, standard errors and goodness-of-fit tests.

Standard errors come from influence functions: for a plug-in estimator T of
a functional of the law, sqrt(Var(IF(X)) / N) is its asymptotic standard
error. The plug-in cumulant estimators carry an O(1/N) bias, which is far
below the standard error at the sample sizes used here.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import stats as sps

from ..characters import joint_cumulant_from_moments

MIN_SAMPLES = 100
HIST_BINS = 64


class InsufficientSampleError(ValueError):
    pass


def _need(n: int) -> None:
    if n < MIN_SAMPLES:
        raise InsufficientSampleError(f"need at least {MIN_SAMPLES} samples, got {n}")


def ks_test(samples, cdf) -> tuple[float, float]:
    """One-sample KS statistic and asymptotic Kolmogorov p-value."""
    x = np.asarray(samples, dtype=float)
    _need(x.size)
    res = sps.kstest(x, cdf, method="asymp")
    return float(res.statistic), float(res.pvalue)


def chi2_gof(counts, probs) -> tuple[float, float]:
    """Pearson χ² against ``probs`` with bins - 1 degrees of freedom."""
    counts = np.asarray(counts, dtype=float)
    probs = np.asarray(probs, dtype=float)
    total = counts.sum()
    _need(int(total))
    expected = total * probs / probs.sum()
    keep = expected > 0
    if np.any(counts[~keep] > 0):
        return float("inf"), 0.0
    stat = float(((counts[keep] - expected[keep]) ** 2 / expected[keep]).sum())
    return stat, float(sps.chi2.sf(stat, keep.sum() - 1))


def empirical_cumulants(samples, order: int = 4) -> list[float]:
    """Plug-in cumulants κ_1..κ_order, via the set-partition formula on raw moments."""
    if not 1 <= order <= 4:
        raise ValueError("order must be between 1 and 4")
    x = np.asarray(samples, dtype=float)
    _need(x.size)
    # shifting does not change κ_r for r >= 2 and keeps the moments well conditioned
    c = x.mean()
    y = x - c
    raw = [float(np.mean(y ** k)) for k in range(order + 1)]
    out = [c]
    for r in range(2, order + 1):
        moments = {}
        for mask in range(1, 1 << r):
            s = frozenset(i + 1 for i in range(r) if mask >> i & 1)
            moments[s] = raw[len(s)]
        out.append(float(joint_cumulant_from_moments(moments, r)))
    return out


# --------------------------------------------------- estimates with errors

@dataclass(frozen=True)
class Estimate:
    value: float
    se: float


def _se(infl: np.ndarray) -> float:
    return float(np.std(infl) / np.sqrt(infl.size))


def mean_est(x) -> Estimate:
    x = np.asarray(x, dtype=float)
    _need(x.size)
    return Estimate(float(x.mean()), _se(x))


def cov_est(x, y) -> Estimate:
    x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
    _need(x.size)
    z = (x - x.mean()) * (y - y.mean())
    return Estimate(float(z.mean()), _se(z))


def var_est(x) -> Estimate:
    return cov_est(x, x)


def second_moment_est(x, y) -> Estimate:
    z = np.asarray(x, dtype=float) * np.asarray(y, dtype=float)
    _need(z.size)
    return Estimate(float(z.mean()), _se(z))


def third_cumulant_est(x) -> Estimate:
    x = np.asarray(x, dtype=float)
    _need(x.size)
    c = x - x.mean()
    s2 = np.mean(c ** 2)
    return Estimate(float(np.mean(c ** 3)), _se(c ** 3 - 3 * s2 * c))


def fourth_cumulant_est(x) -> Estimate:
    x = np.asarray(x, dtype=float)
    _need(x.size)
    c = x - x.mean()
    s2, m3, m4 = np.mean(c ** 2), np.mean(c ** 3), np.mean(c ** 4)
    infl = c ** 4 - 4 * m3 * c - 6 * s2 * (c ** 2)
    return Estimate(float(m4 - 3 * s2 ** 2), _se(infl))


# ------------------------------------------------------------ histograms

def histogram(x, bins: int = HIST_BINS) -> list[tuple[float, float, int, float]]:
    """Rows (bin_left, bin_right, count, density) over mean ± 5 sd."""
    x = np.asarray(x, dtype=float)
    m, s = float(x.mean()), float(x.std())
    if s == 0:
        s = 1.0
    counts, edges = np.histogram(x, bins=bins, range=(m - 5 * s, m + 5 * s))
    width = edges[1] - edges[0]
    n = max(x.size, 1)
    return [(float(a), float(b), int(c), float(c / (n * width)))
            for a, b, c in zip(edges[:-1], edges[1:], counts)]


@dataclass
class SampleStats:
    count: int
    means: np.ndarray
    covariance: np.ndarray
    moments: dict = field(default_factory=dict)
    histograms: list = field(default_factory=list)

    @classmethod
    def from_samples(cls, X, order: int = 2, bins: int = HIST_BINS) -> "SampleStats":
        """Means, covariance, joint raw moments up to ``order`` and marginal histograms."""
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X[:, None]
        _need(X.shape[0])
        from itertools import combinations_with_replacement
        moments = {}
        for r in range(1, order + 1):
            for idx in combinations_with_replacement(range(X.shape[1]), r):
                moments[idx] = float(np.mean(np.prod(X[:, list(idx)], axis=1)))
        cov = np.atleast_2d(np.cov(X, rowvar=False, bias=True))
        return cls(X.shape[0], X.mean(axis=0), cov, moments,
                   [histogram(X[:, j], bins) for j in range(X.shape[1])])

    def is_psd(self, tol: float = 1e-9) -> bool:
        c = self.covariance
        return bool(np.allclose(c, c.T, atol=tol) and np.linalg.eigvalsh(c).min() >= -tol)
