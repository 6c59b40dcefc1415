"""Monte Carlo experiments for the limit theorems, with their reports.

Each experiment samples shapes λ ~ P_{n,ω} through shuffle + RSK and returns
a :class:`Report`: one :class:`Check` per tested quantity (target and where
it comes from, empirical value, standard error, verdict), plus tables of
diagnostics that do not enter the verdict.

Acceptance thresholds (|z| <= 4, p > 1e-3) are calibration choices of the
harness. The limit theorems come without rates, so a check can fail because
n is too small for the limit to be accurate, not only because of noise.
"""
from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import sqrt

import numpy as np

from ..characters import falling
from ..measures import growth_chain_marginal, p_measure
from ..partitions import Partition
from ..specialization import Finite, Geometric, ThomaParameter, thoma
from . import oracles
from .sampling import chunk_rng, sample_shapes
from .stats import (chi2_gof, cov_est, histogram, ks_test, mean_est, second_moment_est,
                    third_cumulant_est)

Z_TOL = 4.0
P_MIN = 1e-3
# chunk index reserved for auxiliary randomness (jitter), far above any real chunk
AUX_STREAM = 1 << 32


class HypothesisWarning(UserWarning):
    pass


# ---------------------------------------------------------------- reports

@dataclass
class Check:
    name: str
    target: object
    empirical: object
    se: float | None = None
    source: str = ""
    kind: str = "z"
    tol: float = Z_TOL
    note: str = ""

    @property
    def z(self) -> float | None:
        if self.kind != "z" or not self.se:
            return None
        return (float(self.empirical) - float(self.target)) / self.se

    @property
    def verdict(self) -> bool:
        if self.kind == "z":
            if not self.se:
                return float(self.empirical) == float(self.target)
            return abs(self.z) <= self.tol
        if self.kind == "p":
            return float(self.empirical) > self.tol
        if self.kind == "max":
            return float(self.empirical) < float(self.target)
        return bool(self.empirical)


def z_check(name, target, est, source, tol=Z_TOL, note="") -> Check:
    return Check(name, float(target), est.value, est.se, source, "z", tol, note)


def p_check(name, pvalue, source, tol=P_MIN, note="") -> Check:
    return Check(name, f"p>{tol:g}", float(pvalue), None, source, "p", tol, note)


def bool_check(name, ok, source, note="") -> Check:
    return Check(name, True, bool(ok), None, source, "bool", 0, note)


def _cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    return str(x)


@dataclass
class Report:
    experiment: str
    config: dict
    checks: list = field(default_factory=list)
    tables: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.verdict for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def add_table(self, name: str, header: list, rows: list) -> None:
        self.tables[name] = (list(header), [list(r) for r in rows])

    def to_csv(self, fh) -> None:
        fh.write("# config: " + json.dumps(self.config, sort_keys=True, default=str) + "\n")
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["check", "target", "source", "empirical", "se", "z", "verdict", "note"])
        for c in self.checks:
            w.writerow([c.name, _cell(c.target), c.source, _cell(c.empirical), _cell(c.se),
                        _cell(c.z), "PASS" if c.verdict else "FAIL", c.note])
        for name, (header, rows) in self.tables.items():
            fh.write(f"# table: {name}\n")
            w.writerow(header)
            for r in rows:
                w.writerow([_cell(x) for x in r])
        for note in self.notes:
            fh.write(f"# note: {note}\n")

    def to_csv_string(self) -> str:
        buf = io.StringIO()
        self.to_csv(buf)
        return buf.getvalue()

    def summary(self) -> str:
        lines = [f"{self.experiment}: {'PASS' if self.ok else 'FAIL'}"]
        for c in self.checks:
            z = f" z={c.z:+.2f}" if c.z is not None else ""
            lines.append(f"  [{'PASS' if c.verdict else 'FAIL'}] {c.name}: empirical={_cell(c.empirical)} "
                         f"target={_cell(c.target)}{z} ({c.source})")
        return "\n".join(lines)


@dataclass
class ExperimentConfig:
    experiment: str
    omega: str = ""
    n: object = None
    samples: int = 0
    seed: int = 0
    workers: int = 1
    out: str | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("out")
        return d


# ------------------------------------------------------- observables of λ

def frobenius_power_sums(shapes, k: int) -> np.ndarray:
    """p_k(λ) = Σ_i [(λ_i - i + 1/2)^k - (-i + 1/2)^k], row-wise."""
    lam = np.asarray(shapes, dtype=float)
    i = np.arange(1, lam.shape[1] + 1)
    return ((lam - i + 0.5) ** k - (0.5 - i) ** k).sum(axis=1)


def sigma_from_shapes(shapes, k: int) -> np.ndarray:
    """Σ_k(λ) for k <= 4, through its polynomial expression in the p_j(λ)."""
    p = {j: frobenius_power_sums(shapes, j) for j in range(1, k + 1)}
    if k == 1:
        return p[1]
    if k == 2:
        return p[2]
    if k == 3:
        return p[3] - 1.5 * p[1] ** 2 + 1.25 * p[1]
    if k == 4:
        return p[4] - 4 * p[2] * p[1] + 5.5 * p[2]
    raise ValueError("Σ_k from shapes is implemented for k <= 4")


def conjugate_rows(shapes, m: int) -> np.ndarray:
    """First m column lengths λ'_1..λ'_m of every shape."""
    lam = np.asarray(shapes)
    return np.stack([(lam >= j).sum(axis=1) for j in range(1, m + 1)], axis=1)


def alpha_values(omega: ThomaParameter, m: int) -> list[float]:
    return _letters(omega.alpha, m)


def beta_values(omega: ThomaParameter, m: int) -> list[float]:
    return _letters(omega.beta, m)


def _letters(alph, m):
    if isinstance(alph, Geometric):
        return [float(alph.scale) * float(alph.ratio) ** i for i in range(m)]
    vals = [float(v) for v in alph.values]
    return (vals + [0.0] * m)[:m]


def _two_letter(omega: ThomaParameter) -> float | None:
    """a when ω = ((a, 1-a), ∅), else None."""
    if (isinstance(omega.alpha, Finite) and len(omega.alpha.values) == 2
            and omega.beta.is_empty and omega.gamma == 0):
        return float(omega.alpha.values[0])
    return None


def _cfg(name, omega, n, samples, seed, workers, **extra) -> dict:
    return ExperimentConfig(name, str(omega), n, samples, seed, workers, None, extra).to_dict()


# ------------------------------------------------------------ experiments

def lln_experiment(omega: ThomaParameter, n_grid, samples: int, seed: int, workers: int = 1,
                   cycles=(2,), rows: int | None = None, final_tol: float | None = None) -> Report:
    """Character ratios χ^λ(k-cycle) and rescaled rows λ_i/n against their limits."""
    n_grid = list(n_grid)
    if rows is None:
        rows = len(omega.alpha.values) if isinstance(omega.alpha, Finite) else 2
    rep = Report("lln", _cfg("lln", omega, n_grid, samples, seed, workers, cycles=list(cycles), rows=rows))
    alphas = alpha_values(omega, rows)
    errs: dict[str, list] = {}
    table = []
    for n in n_grid:
        shapes = sample_shapes(n, omega, samples, seed, workers)
        for k in cycles:
            chi = sigma_from_shapes(shapes, k) / falling(n, k)
            est = mean_est(chi)
            target = float(omega.power_sum(k))
            key = f"chi_{k}"
            errs.setdefault(key, []).append(abs(est.value - target))
            table.append([n, key, target, est.value, est.se, abs(est.value - target)])
            rep.checks.append(z_check(f"{key} n={n}", target, est, "closed form p_k(ω)",
                                      note="unbiased at every n"))
        for i in range(rows):
            col = shapes[:, i] / n if i < shapes.shape[1] else np.zeros(shapes.shape[0])
            est = mean_est(col)
            key = f"row_{i + 1}"
            errs.setdefault(key, []).append(abs(est.value - alphas[i]))
            table.append([n, key, alphas[i], est.value, est.se, abs(est.value - alphas[i])])
    rep.add_table("lln", ["n", "observable", "target", "mean", "se", "abs_error"], table)
    for key, e in errs.items():
        if len(e) > 1:
            rep.checks.append(bool_check(f"{key} error decreases", all(a > b for a, b in zip(e, e[1:])),
                                         "limit theorem", note=" > ".join(f"{x:.3g}" for x in e)))
    if final_tol is not None:
        for k in cycles:
            e = errs[f"chi_{k}"][-1]
            rep.checks.append(Check(f"chi_{k} error at n={n_grid[-1]}", final_tol, e, None,
                                    "tolerance", "max"))
    return rep


def clt_char_experiment(omega: ThomaParameter, n: int, samples: int, seed: int, workers: int = 1,
                        cycles=(2,)) -> Report:
    """X_l = √n (Σ_l(λ)/n^l - p_l(ω)): covariances l m (p_{l+m-1} - p_l p_m), third cumulant 0."""
    cycles = list(cycles)
    rep = Report("clt-char", _cfg("clt-char", omega, n, samples, seed, workers, cycles=cycles))
    shapes = sample_shapes(n, omega, samples, seed, workers)
    p = {k: float(omega.power_sum(k)) for k in range(1, 2 * max(cycles))}
    X = {l: sqrt(n) * (sigma_from_shapes(shapes, l) / n ** l - p[l]) for l in cycles}
    for a, l in enumerate(cycles):
        for m in cycles[a:]:
            target = l * m * (p[l + m - 1] - p[l] * p[m])
            rep.checks.append(z_check(f"cov(X_{l},X_{m})", target, cov_est(X[l], X[m]),
                                      "closed form l m (p_{l+m-1} - p_l p_m)"))
    for l in cycles:
        rep.checks.append(z_check(f"k3(X_{l})", 0.0, third_cumulant_est(X[l]), "Gaussian limit",
                                  note="finite-n value is O(n^-1/2)"))
        rep.add_table(f"histogram X_{l}", ["bin_left", "bin_right", "count", "density"], histogram(X[l]))
    a = _two_letter(omega)
    if a is not None and 2 in cycles:
        lam, prob = oracles.two_row_law(n, a)
        s2 = lam[:, 0] * (lam[:, 0] - 1.0) + lam[:, 1] * (lam[:, 1] - 3.0)
        mom = oracles.law_moments(sqrt(n) * (s2 / n ** 2 - p[2]), prob)
        rep.add_table("exact finite-n law of X_2", ["quantity", "value"],
                      [["mean", mom["mean"]], ["var", mom["var"]], ["k3", mom["k3"]]])
    return rep


def clt_rows_experiment(omega: ThomaParameter, n: int, samples: int, seed: int, workers: int = 1,
                        rows: int | None = None, cols: int | None = None) -> Report:
    """√n(λ_i/n - α_i) and √n(λ'_j/n - β_j): covariance δ v_i - v_i v_j, cross terms -α_i β_j."""
    if rows is None:
        rows = len(omega.alpha.values) if isinstance(omega.alpha, Finite) else 3
    if cols is None:
        cols = 0 if omega.beta.is_empty else (len(omega.beta.values) if isinstance(omega.beta, Finite) else 3)
    alphas, betas = alpha_values(omega, rows), beta_values(omega, cols)
    pos = [x for x in alphas if x > 0]
    if len(set(pos)) < len(pos) or len(set(b for b in betas if b > 0)) < len([b for b in betas if b > 0]):
        warnings.warn("coinciding coordinates: the fluctuations there are not Gaussian; "
                      "use the GUE experiment", HypothesisWarning)
    rep = Report("clt-rows", _cfg("clt-rows", omega, n, samples, seed, workers, rows=rows, cols=cols))
    shapes = sample_shapes(n, omega, samples, seed, workers)
    vecs, names, v = [], [], []
    for i in range(rows):
        col = shapes[:, i] if i < shapes.shape[1] else np.zeros(shapes.shape[0], np.int64)
        vecs.append(sqrt(n) * (col / n - alphas[i]))
        names.append(f"X_{i + 1}")
        v.append(alphas[i])
    if cols:
        lc = conjugate_rows(shapes, cols)
        for j in range(cols):
            vecs.append(sqrt(n) * (lc[:, j] / n - betas[j]))
            names.append(f"Y_{j + 1}")
            v.append(betas[j])
    for a in range(len(vecs)):
        for b in range(a, len(vecs)):
            target = (v[a] if a == b else 0.0) - v[a] * v[b]
            rep.checks.append(z_check(f"cov({names[a]},{names[b]})", target, cov_est(vecs[a], vecs[b]),
                                      "closed form δ_ij v_i - v_i v_j"))
    a2 = _two_letter(omega)
    if a2 is not None:
        lam, prob = oracles.two_row_law(n, a2)
        mom = oracles.law_moments(sqrt(n) * (lam[:, 0] / n - a2), prob)
        rep.add_table("exact finite-n law of X_1", ["quantity", "value"],
                      [["mean", mom["mean"]], ["var", mom["var"]]])
    return rep


def bessel_experiment(n: int, samples: int, seed: int, workers: int = 1) -> Report:
    """2(λ_1 + U - n/2)/√n for 2-shuffles against the Bessel-3 law at time 1.

    λ_1 is integer-valued, so a KS test against a continuous law needs the
    lattice to be spread out: U ~ Unif[0,1) is added, which turns the lattice
    law into its piecewise-linear interpolation and shifts λ_1 by a bounded
    amount, invisible at scale √n. The unjittered statistic is reported in
    the diagnostics table.
    """
    omega = thoma([Fraction(1, 2), Fraction(1, 2)])
    rep = Report("bessel", _cfg("bessel", omega, n, samples, seed, workers))
    shapes, letters = sample_shapes(n, omega, samples, seed, workers, letter_counts=True)
    l1 = shapes[:, 0]
    u = chunk_rng(seed, AUX_STREAM).random(l1.shape[0])
    y = 2 * (l1 + u - n / 2) / sqrt(n)
    D, pval = ks_test(y, oracles.bessel3_cdf)
    rep.checks.append(p_check("KS vs Bessel-3", pval, "closed-form CDF", note=f"D={D:.5g}"))
    quad = oracles.bessel3_mean_quadrature()
    rep.checks.append(z_check("mean", oracles.BESSEL3_MEAN, mean_est(y), "closed form 2√(2/π)",
                              note=f"quadrature {quad:.12f}"))
    rep.checks.append(bool_check("λ_1 >= (number of any one letter)", np.all(l1 >= letters.max(axis=1)),
                                 "Greene bound, exact per sample"))
    raw = 2 * (l1 - n / 2) / sqrt(n)
    Dr, pr = ks_test(raw, oracles.bessel3_cdf)
    lam, prob = oracles.two_row_law(n, 0.5)
    exact_raw = float((prob * 2 * (lam[:, 0] - n / 2) / sqrt(n)).sum())
    m = mean_est(raw)
    rep.add_table("diagnostics", ["quantity", "value"], [
        ["raw mean", m.value], ["raw mean se", m.se], ["raw KS D", Dr], ["raw KS p", pr],
        ["exact finite-n raw mean", exact_raw], ["exact finite-n jittered mean", exact_raw + 1 / sqrt(n)]])
    rep.add_table("histogram", ["bin_left", "bin_right", "count", "density"], histogram(y))
    return rep


def gue_experiment(d: int, n: int, samples: int, seed: int, workers: int = 1) -> Report:
    """Y_i = (λ_i - n/d)/√(n/d) for uniform d-shuffles against the GUE chamber law."""
    omega = thoma([Fraction(1, d)] * d)
    rep = Report("gue", _cfg("gue", omega, n, samples, seed, workers, d=d))
    shapes = sample_shapes(n, omega, samples, seed, workers, width=d)
    rep.checks.append(bool_check("trace zero", np.all(shapes.sum(axis=1) == n), "|λ| = n, exact per sample"))
    scale = sqrt(n / d)
    Y = (shapes - n / d) / scale
    if d <= 3:
        mean, second = oracles.gue_chamber_moments(d)
        src = "closed form" if d <= 2 else "quadrature over the chamber"
        for i in range(d):
            rep.checks.append(z_check(f"E[Y_{i + 1}]", mean[i], mean_est(Y[:, i]), src))
        for i in range(d):
            for j in range(i, d):
                rep.checks.append(z_check(f"E[Y_{i + 1}Y_{j + 1}]", second[i, j],
                                          second_moment_est(Y[:, i], Y[:, j]), src))
        rho = (d + 1) / 2 - np.arange(1, d + 1)
        Yr = Y + rho / scale
        diag = []
        for i in range(d):
            e = mean_est(Yr[:, i])
            diag.append([f"rho-shifted E[Y_{i + 1}]", mean[i], e.value, e.se])
        for i in range(d):
            for j in range(i, d):
                e = cov_est(Y[:, i], Y[:, j])
                diag.append([f"cov(Y_{i + 1},Y_{j + 1})", second[i, j] - mean[i] * mean[j], e.value, e.se])
        lam, prob = oracles.uniform_law(n, d)
        Ye = (lam - n / d) / scale
        for i in range(d):
            diag.append([f"exact finite-n E[Y_{i + 1}]", mean[i], float((prob * Ye[:, i]).sum()), 0.0])
        for i in range(d):
            for j in range(i, d):
                diag.append([f"exact finite-n E[Y_{i + 1}Y_{j + 1}]", second[i, j],
                             float((prob * Ye[:, i] * Ye[:, j]).sum()), 0.0])
        rep.add_table("diagnostics", ["quantity", "target", "value", "se"], diag)
    else:
        rep.notes.append("moment targets are computed for d <= 3 only")
    return rep


def mixed_experiment(blocks, n: int, samples: int, seed: int, workers: int = 1) -> Report:
    """ω with d_j letters of weight p_j: block sums (multinomial CLT) and within-block GUE spreads.

    ``blocks`` is a list of (p_j, d_j) with Σ p_j d_j = 1.
    """
    blocks = sorted(((Fraction(p), int(d)) for p, d in blocks), reverse=True)
    if sum(p * d for p, d in blocks) != 1:
        raise ValueError("the weights p_j d_j must sum to 1 (γ = 0, β = ∅)")
    alpha = [p for p, d in blocks for _ in range(d)]
    omega = thoma(alpha)
    rep = Report("mixed", _cfg("mixed", omega, n, samples, seed, workers,
                               blocks=[[str(p), d] for p, d in blocks]))
    shapes = sample_shapes(n, omega, samples, seed, workers, width=len(alpha))
    sums, start = [], 0
    ws = []
    for j, (p, d) in enumerate(blocks):
        pf = float(p)
        part = shapes[:, start:start + d]
        sums.append((part - n * pf).sum(axis=1) / sqrt(n))
        ws.append(d * pf)
        if d <= 3 and d > 1:
            Y = (part - n * pf) / sqrt(n * pf)
            Y = Y - Y.mean(axis=1, keepdims=True)
            rep.checks.append(bool_check(f"block {j + 1}: Σ Y = 0", np.allclose(Y.sum(axis=1), 0, atol=1e-9),
                                         "chamber is trace zero"))
            mean, _ = oracles.gue_chamber_moments(d)
            for i in range(d):
                rep.checks.append(z_check(f"block {j + 1}: E[Y_{i + 1}]", mean[i], mean_est(Y[:, i]),
                                          "GUE chamber, closed form/quadrature"))
        start += d
    for a in range(len(blocks)):
        for b in range(a, len(blocks)):
            target = (ws[a] if a == b else 0.0) - ws[a] * ws[b]
            rep.checks.append(z_check(f"cov(S_{a + 1},S_{b + 1})", target, cov_est(sums[a], sums[b]),
                                      "multinomial covariance"))
    return rep


def markov_chain_experiment(omega: ThomaParameter, n: int, samples: int, seed: int,
                            workers: int = 1) -> Report:
    """Young-graph chain against P_{n,ω}: exact marginal, then χ² of both samplers."""
    rep = Report("markov-chain", _cfg("markov-chain", omega, n, samples, seed, workers))
    pm = p_measure(n, omega)
    gm = growth_chain_marginal(n, omega)
    if omega.exact:
        same = all(gm[lam] == pm[lam] for lam in set(gm.weights) | set(pm.weights))
    else:
        same = all(abs(gm[lam] - pm[lam]) < 1e-12 for lam in set(gm.weights) | set(pm.weights))
    rep.checks.append(bool_check("exact marginal = P_{n,ω}", same, "dynamic programming over the Young graph"))
    parts = list(pm.weights)
    probs = [float(pm[lam]) for lam in parts]
    for method in ("growth", "rsk"):
        shapes = sample_shapes(n, omega, samples, seed, workers, width=n, method=method)
        counts = {}
        for row in shapes:
            lam = Partition(int(x) for x in row if x)
            counts[lam] = counts.get(lam, 0) + 1
        stat, pval = chi2_gof([counts.get(lam, 0) for lam in parts], probs)
        rep.checks.append(p_check(f"χ² {method} sampler", pval, "exact P_{n,ω}", note=f"stat={stat:.4g}"))
    return rep
