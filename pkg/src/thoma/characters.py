"""Characters of symmetric groups and observables of Young diagrams."""
from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Callable, Iterable, Iterator, Mapping

from .partitions import (ENUMERATION_CAP, CapacityError, Partition, conjugate,
                         dim_hook, partitions_of)


class SizeMismatchError(ValueError):
    pass


class NotAnObservableError(ArithmeticError):
    """The triangular solve left a residual: f is not of the declared degree."""


class MissingMomentError(KeyError):
    pass


def falling(n: int, k: int) -> int:
    return prod(range(n - k + 1, n + 1)) if k <= n else 0


def z_mu(mu) -> int:
    out = 1
    for part in set(mu):
        m = list(mu).count(part)
        out *= part ** m * factorial(m)
    return out


def partition_union(*mus) -> Partition:
    return Partition(sorted((p for mu in mus for p in mu), reverse=True))


# ---------------------------------------------------------------- Frobenius

@dataclass(frozen=True)
class FrobeniusCoords:
    a: tuple
    b: tuple

    @property
    def d(self) -> int:
        return len(self.a)


def frobenius(lam) -> FrobeniusCoords:
    lam = tuple(lam)
    lc = conjugate(lam)
    d = sum(1 for i, p in enumerate(lam, start=1) if p >= i)
    half = Fraction(1, 2)
    a = tuple(lam[i] - i - half for i in range(d))
    b = tuple(lc[i] - i - half for i in range(d))
    return FrobeniusCoords(a, b)


def p_obs(k: int, lam) -> Fraction:
    """Frobenius moment p_k(λ) = Σ a^k + (-1)^{k-1} Σ b^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    fc = frobenius(lam)
    sign = 1 if k % 2 else -1
    return sum((x ** k for x in fc.a), Fraction(0)) + sign * sum((y ** k for y in fc.b), Fraction(0))


def p_obs_mu(mu, lam) -> Fraction:
    return prod((p_obs(k, lam) for k in mu), start=Fraction(1))


# ------------------------------------------------- Murnaghan-Nakayama rule

@lru_cache(maxsize=None)
def _mn(lam: tuple, mu: tuple) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    ell = len(lam)
    beta = [lam[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for x in beta if t < x < b)
        new_beta = sorted((x for x in beta if x != b), reverse=True)
        new_beta.append(t)
        new_beta.sort(reverse=True)
        new = tuple(x - (ell - 1 - i) for i, x in enumerate(new_beta))
        new = tuple(p for p in new if p > 0)
        total += (-1) ** height * _mn(new, rest)
    return total


def mn_character(lam, mu) -> int:
    """ζ^λ(μ), the irreducible character at a permutation of cycle type μ."""
    lam, mu = tuple(lam), tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise SizeMismatchError(f"|{lam}| != |{mu}|")
    return _mn(lam, mu)


def character_table(n: int, cap: int = 10) -> tuple[list[Partition], list[Partition], list[list[int]]]:
    if n > cap:
        raise CapacityError(f"character tables are capped at n = {cap}")
    parts = partitions_of(n)
    return parts, parts, [[mn_character(lam, mu) for mu in parts] for lam in parts]


def write_character_table_csv(n: int, fh) -> None:
    rows, cols, table = character_table(n)
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["lambda"] + [_fmt(mu) for mu in cols])
    for lam, row in zip(rows, table):
        w.writerow([_fmt(lam)] + row)


def _fmt(lam) -> str:
    return "(" + ",".join(map(str, lam)) + ")"


# ----------------------------------------------------------------- Σ_μ

@lru_cache(maxsize=None)
def _sigma(mu: tuple, lam: tuple) -> Fraction:
    n, k = sum(lam), sum(mu)
    if n < k:
        return Fraction(0)
    chi = _mn(lam, mu + (1,) * (n - k))
    return Fraction(falling(n, k) * chi, dim_hook(lam))


def sigma(mu, lam) -> Fraction:
    return _sigma(tuple(sorted(mu, reverse=True)), tuple(lam))


def normalized_character(lam, mu) -> Fraction:
    """χ^λ(μ ⊔ 1^{n-|μ|}) = Σ_μ(λ) / n^{↓|μ|}."""
    n = sum(lam)
    return sigma(mu, lam) / falling(n, sum(mu))


# ---------------------------------------------------------- observables

@dataclass(frozen=True)
class Observable:
    """A function on partitions together with a degree bound."""
    eval: Callable[[tuple], object]
    degree_bound: int
    name: str = "f"

    def __call__(self, lam):
        return self.eval(tuple(lam))

    def __mul__(self, other: "Observable") -> "Observable":
        if not isinstance(other, Observable):
            c = other
            return Observable(lambda lam: c * self.eval(lam), self.degree_bound, f"{c}*{self.name}")
        return Observable(lambda lam: self.eval(lam) * other.eval(lam),
                          self.degree_bound + other.degree_bound, f"{self.name}*{other.name}")

    __rmul__ = __mul__

    def __add__(self, other: "Observable") -> "Observable":
        return Observable(lambda lam: self.eval(lam) + other.eval(lam),
                          max(self.degree_bound, other.degree_bound), f"{self.name}+{other.name}")

    def __sub__(self, other: "Observable") -> "Observable":
        return self + other * (-1)


def p_observable(*mu: int) -> Observable:
    mu = tuple(mu)
    return Observable(lambda lam: p_obs_mu(mu, lam), sum(mu), "p" + "".join(map(str, mu)))


def sigma_observable(*mu: int) -> Observable:
    mu = tuple(sorted(mu, reverse=True))
    return Observable(lambda lam: sigma(mu, lam), sum(mu), "Sigma" + "".join(map(str, mu)))


def expand_in_sigma_basis(f: Observable, tol: float = 1e-9, check: bool = True) -> dict[Partition, object]:
    """Coefficients c_μ (|μ| <= D) with f = Σ c_μ Σ_μ on every diagram.

    Level by level: on diagrams of size m the unknown top-level coefficients
    are read off by column orthogonality of the character table.
    """
    D = f.degree_bound
    if D > 10:
        raise CapacityError("degree bound is capped at 10")
    coeffs: dict[Partition, object] = {}

    def lower(lam):
        return sum((c * sigma(mu, lam) for mu, c in coeffs.items()), Fraction(0))

    for m in range(D + 1):
        parts = partitions_of(m)
        # r(λ) dim λ / m!  =  Σ_{|μ|=m} c_μ ζ^λ(μ)
        s = {lam: (f(lam) - lower(lam)) * Fraction(dim_hook(lam), factorial(m)) for lam in parts}
        for rho in parts:
            c = sum((mn_character(lam, rho) * s[lam] for lam in parts), Fraction(0)) / z_mu(rho)
            if c != 0:
                coeffs[rho] = c
    if check:
        for m in range(D + 1, min(D + 2, ENUMERATION_CAP) + 1):
            for lam in partitions_of(m):
                if abs(f(lam) - lower(lam)) > tol:
                    raise NotAnObservableError(
                        f"{f.name} is not an observable of degree <= {D} (residual at {tuple(lam)})")
    return coeffs


def evaluate_sigma_expansion(coeffs: Mapping, lam) -> Fraction:
    return sum((c * sigma(mu, lam) for mu, c in coeffs.items()), Fraction(0))


# ------------------------------------------------------------- cumulants

def set_partitions(items) -> Iterator[list[tuple]]:
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        yield [(first,)] + sub
        for i in range(len(sub)):
            yield sub[:i] + [(first,) + sub[i]] + sub[i + 1:]


def mobius(num_blocks: int) -> int:
    return (-1) ** (num_blocks - 1) * factorial(num_blocks - 1)


def joint_cumulant_from_moments(moments: Mapping, r: int):
    """Möbius sum over set partitions of {1..r}.

    ``moments`` maps each nonempty subset S of {1..r} (frozenset or sorted
    tuple) to E[Π_{j in S} X_j].
    """
    if r > 8:
        raise CapacityError("r is capped at 8")
    table = {frozenset(k if isinstance(k, Iterable) else (k,)): v for k, v in moments.items()}
    total = 0
    for pi in set_partitions(range(1, r + 1)):
        term = mobius(len(pi))
        for block in pi:
            key = frozenset(block)
            if key not in table:
                raise MissingMomentError(f"missing moment for {sorted(key)}")
            term = term * table[key]
        total = total + term
    return total


def cumulant_from_samples(columns) -> float:
    """k(X_1..X_r) estimated from sample columns by plugging in empirical moments."""
    import numpy as np
    cols = [np.asarray(c, dtype=float) for c in columns]
    r = len(cols)
    moments = {}
    for k in range(1, 1 << r):
        s = frozenset(i + 1 for i in range(r) if k >> i & 1)
        moments[s] = float(np.mean(prod((cols[i - 1] for i in s), start=np.ones_like(cols[0]))))
    return joint_cumulant_from_moments(moments, r)
