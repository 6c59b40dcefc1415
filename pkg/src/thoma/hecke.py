"""Hecke algebra characters, Markov traces and (q,t)-Plancherel measures.

Everything goes through symmetric functions; there is no arithmetic on
elements T_σ. Two closed forms use q^{-c} where c = i - j is the content of
a cell (row minus column), which is the sign that agrees with the
Jacobi-Trudi evaluation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import prod

from .characters import SizeMismatchError, character_table, mn_character, z_mu
from .measures import PERMUTATION_CAP, PartitionMeasure, PermutationMeasure, p_measure
from .partitions import (CapacityError, Partition, conjugate, content, dim_hook,
                         hook_lengths, n_statistic, partitions_of)
from .shuffle_rsk import comaj_perm, longest_element, compose
from .specialization import PowerSums, ThomaParameter, geometric, schur

H_TO_P_CAP = 10


def _merge(a: tuple, b: tuple) -> Partition:
    return Partition(sorted(a + b, reverse=True))


@lru_cache(maxsize=None)
def _h_to_p(mu: tuple) -> dict:
    if not mu:
        return {Partition(()): Fraction(1)}
    head = {nu: Fraction(1, z_mu(nu)) for nu in partitions_of(mu[0])}
    out: dict = {}
    for nu, a in head.items():
        for rho, b in _h_to_p(mu[1:]).items():
            key = _merge(nu, rho)
            out[key] = out.get(key, 0) + a * b
    return out


def h_to_p(mu) -> dict:
    """Coefficients of h_μ in the power-sum basis."""
    mu = Partition(mu)
    if mu.size > H_TO_P_CAP:
        raise CapacityError(f"h_to_p is capped at |μ| = {H_TO_P_CAP}")
    return dict(_h_to_p(tuple(mu)))


def q_character(lam, mu, q):
    """ζ^λ(q, T_μ); at q = 1 this is the symmetric group character."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise SizeMismatchError(f"|λ| = {lam.size} but |μ| = {mu.size}")
    if q == 1:
        return mn_character(lam, mu)
    total = 0 * q
    for nu, coeff in h_to_p(mu).items():
        total += coeff * prod((q ** k - 1 for k in nu), start=q ** 0) * mn_character(lam, nu)
    return total / (q - 1) ** mu.length


@dataclass(frozen=True)
class QCharacterTable:
    q: object
    rows: list
    cols: list
    matrix: list

    def __getitem__(self, key):
        lam, mu = key
        return self.matrix[self.rows.index(Partition(lam))][self.cols.index(Partition(mu))]


def q_character_table(n: int, q) -> QCharacterTable:
    if q == 1:
        rows, cols, m = character_table(n)
        return QCharacterTable(q, rows, cols, m)
    parts = partitions_of(n)
    return QCharacterTable(q, parts, list(parts),
                           [[q_character(lam, mu, q) for mu in parts] for lam in parts])


def q_frobenius(mu, q, letters):
    """q_μ(q, X) = h_μ(qX - X)/(q-1)^{ℓ(μ)} on a finite alphabet."""
    mu = Partition(mu)
    total = 0 * q
    for nu, coeff in h_to_p(mu).items():
        total += coeff * prod(((q ** k - 1) * sum(x ** k for x in letters) for k in nu), start=q ** 0)
    return total / (q - 1) ** mu.length


# ------------------------------------------------------------ Markov trace

def x_qz(q, z) -> PowerSums:
    """The alphabet X_{q,z} through p_k = ((1-q+z)^k - z^k)/(1-q^k)."""
    return PowerSums(lambda k: ((1 - q + z) ** k - z ** k) / (1 - q ** k), f"X[{q},{z}]")


def y_qz(q, z) -> PowerSums:
    """Y = qX - X, so p_k(Y) = (q^k - 1) p_k(X_{q,z})."""
    return PowerSums(lambda k: z ** k - (1 - q + z) ** k, f"Y[{q},{z}]")


@lru_cache(maxsize=None)
def _xqz_cached(q, z):
    return x_qz(q, z)


def markov_hook_content(lam, q, z):
    cells = Partition(lam).cells()
    num = prod(((1 - q) + z * (1 - q ** (-content(c))) for c in cells), start=q ** 0)
    den = prod((1 - q ** h for h in hook_lengths(lam)), start=q ** 0)
    return q ** n_statistic(lam) * num / den


@dataclass(frozen=True)
class TraceWeight:
    jacobi_trudi: object
    hook_content: object

    @property
    def difference(self):
        return self.jacobi_trudi - self.hook_content

    @property
    def value(self):
        return self.jacobi_trudi


def markov_trace_weight(lam, q, z) -> TraceWeight:
    """s_λ(X_{q,z}) by Jacobi-Trudi and by the hook-content product."""
    return TraceWeight(schur(tuple(lam), _xqz_cached(q, z)), markov_hook_content(lam, q, z))


def markov_trace(mu, q, z):
    """τ_z(T_μ) = Σ_λ s_λ(X_{q,z}) ζ^λ(q, μ)."""
    mu = Partition(mu)
    return sum((markov_trace_weight(lam, q, z).value * q_character(lam, mu, q)
                for lam in partitions_of(mu.size)), start=0 * q)


# -------------------------------------------------------- (q,t)-Plancherel

@dataclass(frozen=True)
class QtParams:
    q: object
    t: object

    def __post_init__(self):
        if not 0 < self.q < 1:
            raise ValueError("q must lie in (0, 1)")
        if not 0 <= self.t <= 1:
            raise ValueError("t must lie in [0, 1]")

    @property
    def z(self):
        return -(1 - self.q) * (1 - self.t)

    @property
    def exact(self) -> bool:
        return isinstance(self.q, (int, Fraction)) and isinstance(self.t, (int, Fraction))

    @property
    def omega(self) -> ThomaParameter:
        q, t = self.q, self.t
        return ThomaParameter(geometric(t * (1 - q), q, self.exact),
                              geometric((1 - t) * (1 - q), q, self.exact))


def qt_power_sum(k: int, q, t):
    return (t ** k - (t - 1) ** k) * (1 - q) ** k / (1 - q ** k)


def qt_hook_content(lam, q, t):
    """dim λ · (q^{n(λ)}/∏{h}_q) ∏ (t + (1-t) q^{-c}); a rational function of q."""
    lam = Partition(lam)
    one = q ** 0
    qint = prod(((1 - q ** h) / (1 - q) for h in hook_lengths(lam)), start=one)
    num = prod((t + (1 - t) * q ** (-content(c)) for c in lam.cells()), start=one)
    return dim_hook(lam) * q ** n_statistic(lam) * num / qint


def qt_plancherel(n: int, params: QtParams, tol: float = 1e-10) -> PartitionMeasure:
    pm = p_measure(n, params.omega)
    for lam, w in pm.weights.items():
        alt = qt_hook_content(lam, params.q, params.t)
        if (w != alt) if params.exact else abs(w - alt) > tol:
            raise ArithmeticError(f"product form disagrees at {tuple(lam)}: {w} vs {alt}")
    return pm


def qt_plancherel_residuals(n: int, params: QtParams) -> dict:
    pm = p_measure(n, params.omega)
    return {lam: w - qt_hook_content(lam, params.q, params.t) for lam, w in pm.weights.items()}


def qt_inverse_symmetric(n: int, params: QtParams) -> bool:
    """ℙ_{n,q,t}[λ] = ℙ_{n,1/q,t}[λ'], the right side from the product form at 1/q."""
    pm = p_measure(n, params.omega)
    qi = 1 / params.q
    return all(w == qt_hook_content(conjugate(lam), qi, params.t) if params.exact
               else abs(w - qt_hook_content(conjugate(lam), qi, params.t)) < 1e-10
               for lam, w in pm.weights.items())


def _q_factorial(m: int, q):
    return prod(((1 - q ** i) / (1 - q) for i in range(1, m + 1)), start=q ** 0)


def q_word_weight(w, q):
    """ℚ_{m,q}[w] = q^{comaj(w)}/{m!}_q."""
    return q ** comaj_perm(w) / _q_factorial(len(w), q)


def qt_permutation_weight(s, params: QtParams):
    q, t = params.q, params.t
    n = len(s)
    rev = compose(s, longest_element(n))
    return sum((t ** i * (1 - t) ** (n - i) * q_word_weight(s[:i], q) * q_word_weight(rev[:n - i], q)
                for i in range(n + 1)), start=0 * q)


def qt_permutation_measure(n: int, params: QtParams) -> PermutationMeasure:
    if n > PERMUTATION_CAP:
        raise CapacityError(f"exact permutation measures are capped at n = {PERMUTATION_CAP}")
    return PermutationMeasure(n, {s: qt_permutation_weight(s, params)
                                  for s in permutations(range(1, n + 1))})
