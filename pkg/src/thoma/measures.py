"""Exact coherent measures on partitions and their lifts to permutations."""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from math import factorial

import numpy as np

from .characters import falling, sigma
from .partitions import (CapacityError, Partition, conjugate, conjugate_composition,
                         covers, dim_hook, partitions_of, partitions_upto, restrict)
from .shuffle_rsk import recoil_composition, rsk_shape
from .specialization import L_c, ThomaParameter, schur

PARTITION_CAP = 12
PERMUTATION_CAP = 8


class DegenerateStateError(ValueError):
    pass


def _fmt(x) -> str:
    return "(" + ",".join(map(str, x)) + ")"


@dataclass
class PartitionMeasure:
    n: int
    weights: dict = field(default_factory=dict)

    def total(self):
        return sum(self.weights.values(), start=0)

    def __getitem__(self, lam):
        return self.weights.get(Partition(lam), 0)

    def to_csv(self, fh) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["partition", "weight"])
        for lam, p in self.weights.items():
            w.writerow([_fmt(lam), str(p)])


@dataclass
class PermutationMeasure:
    n: int
    weights: dict = field(default_factory=dict)

    def total(self):
        return sum(self.weights.values(), start=0)

    def __getitem__(self, s):
        return self.weights.get(tuple(s), 0)

    def to_csv(self, fh) -> None:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["permutation", "weight"])
        for s, p in self.weights.items():
            w.writerow(["".join(map(str, s)) if len(s) < 10 else _fmt(s), str(p)])


def p_measure(n: int, omega: ThomaParameter) -> PartitionMeasure:
    """P_{n,ω}[λ] = dim λ · s_λ(ω)."""
    if n > PARTITION_CAP:
        raise CapacityError(f"exact partition measures are capped at n = {PARTITION_CAP}")
    return PartitionMeasure(n, {lam: dim_hook(lam) * schur(lam, omega) for lam in partitions_of(n)})


def q_weight(s, omega: ThomaParameter):
    """Q_{n,ω}[σ] as the sum over i + j + k = n of (γ^k/k!) L_{c[1,i]}(α) L_{conj c[i+1,i+j]}(β),
    c being the recoil composition of σ."""
    return q_of_composition(recoil_composition(s), omega)


@lru_cache(maxsize=1 << 14)
def q_of_composition(c, omega: ThomaParameter):
    n = sum(c)
    g = omega.gamma
    one = omega.one()
    total = 0 * one
    for i in range(n + 1):
        la = L_c(restrict(c, 1, i), omega.alpha)
        if not la:
            continue
        for j in range(n - i + 1):
            k = n - i - j
            if k and not g:
                continue
            lb = L_c(conjugate_composition(restrict(c, i + 1, i + j)), omega.beta)
            total = total + one * la * lb * g ** k / factorial(k)
    return total


def q_measure(n: int, omega: ThomaParameter) -> PermutationMeasure:
    if n > PERMUTATION_CAP:
        raise CapacityError(f"exact permutation measures are capped at n = {PERMUTATION_CAP}")
    return PermutationMeasure(n, {s: q_weight(s, omega) for s in permutations(range(1, n + 1))})


@dataclass
class Report:
    ok: bool
    residuals: dict

    def __bool__(self):
        return self.ok


def pushforward(q: PermutationMeasure) -> PartitionMeasure:
    out: dict = {}
    for s, w in q.weights.items():
        lam = rsk_shape(s)
        out[lam] = out.get(lam, 0) + w
    return PartitionMeasure(q.n, out)


def pushforward_check(n: int, omega: ThomaParameter, tol: float = 1e-12) -> Report:
    pm = p_measure(n, omega)
    push = pushforward(q_measure(n, omega))
    res = {lam: push[lam] - pm[lam] for lam in pm.weights}
    exact = omega.exact
    ok = all((r == 0) if exact else abs(r) < tol for r in res.values())
    return Report(ok, res)


def harmonicity_check(omega: ThomaParameter, n_max: int, tol: float = 1e-12) -> Report:
    """s_λ(ω) = Σ_{λ↗Λ} s_Λ(ω) for every |λ| < n_max."""
    if n_max > 11:
        raise CapacityError("harmonicity checks are capped at n_max = 11")
    res = {}
    for lam in partitions_upto(n_max - 1):
        res[lam] = schur(lam, omega) - sum((schur(mu, omega) for mu in covers(lam)), start=0)
    ok = all((r == 0) if omega.exact else abs(r) < tol for r in res.values())
    return Report(ok, res)


def expect_sigma(n: int, omega: ThomaParameter, mu) -> tuple:
    """(enumerated E[Σ_μ], closed form n^{↓|μ|} p_μ(ω))."""
    if n > 10:
        raise CapacityError("expect_sigma enumerates at most n = 10")
    mu = tuple(mu)
    pm = p_measure(n, omega)
    lhs = sum((w * sigma(mu, lam) for lam, w in pm.weights.items()), start=0)
    rhs = falling(n, sum(mu)) * omega.one()
    for k in mu:
        rhs = rhs * omega.power_sum(k)
    return lhs, rhs


def conjugation_symmetric(n: int, omega: ThomaParameter) -> bool:
    a, b = p_measure(n, omega), p_measure(n, omega.swap())
    return all(a[lam] == b[conjugate(lam)] for lam in a.weights)


# ---------------------------------------------------------- growth chain

def transition_weights(lam, omega: ThomaParameter) -> dict:
    base = schur(lam, omega)
    if base == 0:
        raise DegenerateStateError(f"s_λ(ω) = 0 at λ = {tuple(lam)}")
    weights = {mu: schur(mu, omega) / base for mu in covers(lam)}
    if not any(weights.values()):
        raise DegenerateStateError(f"no admissible cover of {tuple(lam)}")
    return weights


def growth_chain_step(lam, omega: ThomaParameter, rng: np.random.Generator) -> Partition:
    weights = transition_weights(lam, omega)
    keys = list(weights)
    p = np.array([max(float(weights[k]), 0.0) for k in keys])
    return keys[rng.choice(len(keys), p=p / p.sum())]


def growth_chain_marginal(n: int, omega: ThomaParameter) -> PartitionMeasure:
    """Exact law after n steps of the chain p(λ, Λ) = s_Λ(ω)/s_λ(ω), started at ∅."""
    law = {Partition(()): omega.one()}
    for _ in range(n):
        nxt: dict = {}
        for lam, w in law.items():
            if not w:
                continue
            for mu, p in transition_weights(lam, omega).items():
                nxt[mu] = nxt.get(mu, 0) + w * p
        law = nxt
    return PartitionMeasure(n, law)
