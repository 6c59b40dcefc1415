"""Exact invariant suites: every identity that can be checked without sampling."""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

import numpy as np

from .. import characters as ch
from .. import hecke, measures, pitman
from ..partitions import dim_hook, partitions_of, partitions_upto
from ..shuffle_rsk import shape_process
from ..specialization import ThomaParameter, ZERO, thoma

F = Fraction


def reference_omegas() -> dict[str, ThomaParameter]:
    return {
        "0": ZERO,
        "((1/2,1/2),())": thoma([F(1, 2), F(1, 2)]),
        "((2/3,1/3),())": thoma([F(2, 3), F(1, 3)]),
        "((1/2),(1/4)), gamma=1/4": thoma([F(1, 2)], [F(1, 4)]),
        "omega_{q=1/2,t=2/3}": hecke.QtParams(F(1, 2), F(2, 3)).omega,
    }


@dataclass
class SuiteResult:
    name: str
    ok: bool
    seconds: float
    detail: str = ""


def _timed(name, fn) -> SuiteResult:
    t0 = time.perf_counter()
    ok, detail = fn()
    return SuiteResult(name, bool(ok), time.perf_counter() - t0, detail)


def normalization(n_max: int = 10):
    bad = [(k, n) for k, om in reference_omegas().items() for n in range(n_max + 1)
           if measures.p_measure(n, om).total() != 1]
    return not bad, f"failures: {bad}" if bad else f"n <= {n_max}, 5 parameters"


def pushforward(n_max: int = 7):
    bad = [(k, n) for k, om in reference_omegas().items() for n in range(1, n_max + 1)
           if not measures.pushforward_check(n, om)]
    return not bad, f"failures: {bad}" if bad else f"n <= {n_max}, 5 parameters"


def orthogonality(n_max: int = 8):
    for n in range(1, n_max + 1):
        rows, cols, m = ch.character_table(n)
        M = np.array(m, dtype=object)
        gram = M.T.dot(M)
        for a, mu in enumerate(cols):
            for b in range(len(cols)):
                if gram[a, b] != (ch.z_mu(mu) if a == b else 0):
                    return False, f"column orthogonality fails at n = {n}"
        ones = cols.index(tuple([1] * n))
        if any(M[i, ones] != dim_hook(lam) for i, lam in enumerate(rows)):
            return False, f"ζ^λ(1^n) differs from the hook formula at n = {n}"
    return True, f"n <= {n_max}"


def wassermann_and_products(size: int = 8, degree: int = 7):
    half = F(1, 2)
    for lam in partitions_upto(size):
        p = lambda *mu: ch.p_obs_mu(mu, lam)
        s = lambda k: ch.sigma((k,), lam)
        if not (s(1) == p(1) and s(2) == p(2)
                and s(3) == p(3) - 3 * half * p(1, 1) + F(5, 4) * p(1)
                and s(4) == p(4) - 4 * p(2, 1) + 11 * half * p(2)):
            return False, f"Wassermann formula fails at {lam}"
    for l in range(1, degree):
        for m in range(l, degree - l + 1):
            e = ch.expand_in_sigma_basis(ch.sigma_observable(l) * ch.sigma_observable(m))
            lead = ch.partition_union((l,), (m,))
            if e.get(lead) != 1 or e.get((l + m - 1,)) != l * m:
                return False, f"leading terms of Σ_{l}Σ_{m}: {e}"
            rest = {mu: c for mu, c in e.items() if mu not in (lead, (l + m - 1,))}
            if any(sum(mu) > l + m - 2 for mu in rest):
                return False, f"Σ_{l}Σ_{m} has extra terms of high degree: {rest}"
    return True, f"|λ| <= {size}, l + m <= {degree}"


def expectations(n_max: int = 8, mu_max: int = 4):
    for key, om in reference_omegas().items():
        for n in range(1, n_max + 1):
            for k in range(1, mu_max + 1):
                for mu in partitions_of(k):
                    lhs, rhs = measures.expect_sigma(n, om, mu)
                    if lhs != rhs:
                        return False, f"E[Σ_{mu}] at n = {n}, ω = {key}: {lhs} vs {rhs}"
    return True, f"n <= {n_max}, |μ| <= {mu_max}"


def pitman_rsk(d_max: int = 3, n_max: int = 8, random_words: int = 10_000, braid_trials: int = 10_000,
               seed: int = 0):
    for d in range(1, d_max + 1):
        for n in range(1, n_max + 1):
            words = np.array(list(product(range(1, d + 1), repeat=n)), dtype=np.int64)
            got = pitman.shape_process_pitman(words, d)
            for w, g in zip(words, got):
                want = [tuple(lam) + (0,) * (d - len(lam)) for lam in shape_process(tuple(w))]
                if [tuple(int(x) for x in row) for row in g] != want:
                    return False, f"G_d differs from Schensted at w = {tuple(w)}"
    rng = np.random.default_rng(seed)
    ds = rng.integers(1, 6, random_words)
    ns = rng.integers(1, 201, random_words)
    for d in range(1, 6):
        for n in np.unique(ns[ds == d]):
            cnt = int(((ds == d) & (ns == n)).sum())
            words = rng.integers(1, d + 1, size=(cnt, int(n)))
            got = pitman.shape_process_pitman(words, d)
            for w, g in zip(words, got):
                want = [tuple(lam) + (0,) * (d - len(lam)) for lam in shape_process(tuple(w))]
                if [tuple(int(x) for x in row) for row in g] != want:
                    return False, f"G_d differs from Schensted on a random word (d = {d}, n = {n})"
    for d in (3, 4, 5):
        rep = pitman.braid_check(d, braid_trials, rng)
        if not rep.ok:
            return False, f"braid relations fail: {rep}"
    return True, f"exhaustive d <= {d_max}, n <= {n_max}; {random_words} random words; braid d = 3..5"


def markov_chain(n_max: int = 8):
    for key, om in reference_omegas().items():
        for n in range(n_max + 1):
            gm, pm = measures.growth_chain_marginal(n, om), measures.p_measure(n, om)
            if any(gm[lam] != pm[lam] for lam in set(gm.weights) | set(pm.weights)):
                return False, f"chain marginal differs at n = {n}, ω = {key}"
    return True, f"n <= {n_max}"


def hecke_layer(q=F(1, 3), z=F(2, 7), t=F(2, 5)):
    for n in range(1, 7):
        for mu in partitions_of(n):
            if hecke.markov_trace(mu, q, z) != z ** (n - len(mu)):
                return False, f"τ_z(T_μ) fails at μ = {mu}"
    for lam in partitions_upto(8):
        if hecke.markov_trace_weight(lam, q, z).difference != 0:
            return False, f"Jacobi-Trudi and hook-content differ at {lam}"
    params = hecke.QtParams(q, t)
    for n in range(1, 9):
        if not hecke.qt_inverse_symmetric(n, params):
            return False, f"1/q symmetry fails at n = {n}"
    return True, "τ_z for n <= 6, both Schur paths |λ| <= 8, 1/q symmetry n <= 8"


SUITES = {
    "normalization": normalization,
    "pushforward": pushforward,
    "orthogonality": orthogonality,
    "observables": wassermann_and_products,
    "expectations": expectations,
    "pitman-rsk": pitman_rsk,
    "markov-chain": markov_chain,
    "hecke": hecke_layer,
}


def run_all(names=None) -> list[SuiteResult]:
    return [_timed(name, SUITES[name]) for name in (names or SUITES)]
