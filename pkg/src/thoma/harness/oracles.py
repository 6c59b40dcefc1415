"""Reference values for the statistical experiments.

Limit targets come from closed forms or quadrature. Exact finite-n laws of
the shape under two-letter and uniform few-letter shuffles are computed by
enumeration (with log-Gamma weights), so that reports can tell apart a
sampling fluctuation and a genuine finite-n bias.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial, pi, sqrt

import numpy as np
from scipy import integrate
from scipy.special import erf, gammaln


# ---------------------------------------------------------------- Bessel-3

def bessel3_pdf(y):
    y = np.asarray(y, dtype=float)
    return np.where(y >= 0, sqrt(2 / pi) * y ** 2 * np.exp(-y ** 2 / 2), 0.0)


def bessel3_cdf(y):
    y = np.maximum(np.asarray(y, dtype=float), 0.0)
    return erf(y / sqrt(2)) - sqrt(2 / pi) * y * np.exp(-y ** 2 / 2)


BESSEL3_MEAN = 2 * sqrt(2 / pi)


def bessel3_mean_quadrature() -> float:
    return integrate.quad(lambda y: y * float(bessel3_pdf(y)), 0, np.inf, epsabs=1e-13)[0]


# ------------------------------------------------------------ GUE chamber

@lru_cache(maxsize=None)
def gue_chamber_moments(d: int) -> tuple[np.ndarray, np.ndarray]:
    """(E[Y], E[Y Y^T]) for the ordered trace-zero density ∝ Δ(y)² e^{-|y|²/2}.

    d = 2 in closed form, d = 3 by two-dimensional quadrature over the chamber.
    """
    if d == 1:
        return np.zeros(1), np.zeros((1, 1))
    if d == 2:
        m = 2 / sqrt(pi)
        return np.array([m, -m]), np.array([[1.5, -1.5], [-1.5, 1.5]])
    if d != 3:
        raise ValueError("quadrature targets are available for d <= 3")
    e1 = np.array([1.0, -1.0, 0.0]) / sqrt(2)
    e2 = np.array([1.0, 1.0, -2.0]) / sqrt(6)

    def point(v, u):
        return u * e1 + v * e2

    def weight(y):
        delta = (y[0] - y[1]) * (y[0] - y[2]) * (y[1] - y[2])
        return delta * delta * np.exp(-(y @ y) / 2)

    # chamber y1 > y2 > y3 is u > 0, v > u/√3 in the (e1, e2) basis
    R = 14.0

    def integral(g):
        return integrate.dblquad(lambda v, u: g(point(v, u)) * weight(point(v, u)),
                                 0, R, lambda u: u / sqrt(3), lambda u: R,
                                 epsabs=1e-12, epsrel=1e-11)[0]

    z = integral(lambda y: 1.0)
    mean = np.array([integral(lambda y, i=i: y[i]) for i in range(3)]) / z
    second = np.empty((3, 3))
    for i in range(3):
        for j in range(i, 3):
            second[i, j] = second[j, i] = integral(lambda y, i=i, j=j: y[i] * y[j]) / z
    return mean, second


def gue_chamber_density_constant(d: int) -> float:
    """1!2!...(d-1)! (2π)^{(d-1)/2}."""
    return float(np.prod([factorial(k) for k in range(1, d)])) * (2 * pi) ** ((d - 1) / 2)


# ------------------------------------------------------- exact finite-n laws

def two_row_law(n: int, a: float) -> tuple[np.ndarray, np.ndarray]:
    """Shapes (n-k, k) and their probabilities for ω = ((a, 1-a), ∅), a >= 1/2."""
    b = 1 - a
    k = np.arange(n // 2 + 1)
    m = n - 2 * k
    log_dim = gammaln(n + 1) - gammaln(k + 1) - gammaln(n - k + 1) + np.log(m + 1) - np.log(n - k + 1)
    if a == b:
        log_h = m * np.log(a) + np.log(m + 1)
    else:
        # h_m(a, b) = a^m (1 - (b/a)^{m+1}) / (1 - b/a)
        r = b / a
        log_h = m * np.log(a) + np.log1p(-r ** (m + 1)) - np.log1p(-r)
    lw = log_dim + k * np.log(a * b) + log_h
    p = np.exp(lw - lw.max())
    return np.stack([n - k, k], axis=1), p / p.sum()


def uniform_law(n: int, d: int) -> tuple[np.ndarray, np.ndarray]:
    """Shapes with at most d rows and their probabilities for the uniform d-letter shuffle."""
    if d == 1:
        return np.array([[n]]), np.array([1.0])
    if d == 2:
        return two_row_law(n, 0.5)
    if d != 3:
        raise ValueError("exact uniform laws are enumerated for d <= 3")
    rows = []
    for l1 in range(-(-n // 3), n + 1):
        r = n - l1
        l2 = np.arange(-(-r // 2), min(l1, r) + 1)
        rows.append(np.stack([np.full(l2.shape, l1), l2, r - l2], axis=1))
    lam = np.concatenate(rows)
    l = lam.astype(float) + np.array([2.0, 1.0, 0.0])
    vd = (l[:, 0] - l[:, 1]) * (l[:, 0] - l[:, 2]) * (l[:, 1] - l[:, 2])
    # dim_{S_n} λ = n! Δ(l)/∏ l_i!, dim_{GL_3} λ = Δ(l)/2
    lw = gammaln(n + 1) + 2 * np.log(vd) - gammaln(l + 1).sum(axis=1) - np.log(2) - n * np.log(3)
    p = np.exp(lw - lw.max())
    return lam, p / p.sum()


def law_moments(values: np.ndarray, p: np.ndarray) -> dict:
    """Mean, variance and third central moment under a discrete law."""
    m = float((p * values).sum())
    c = values - m
    return {"mean": m, "var": float((p * c ** 2).sum()), "k3": float((p * c ** 3).sum())}
