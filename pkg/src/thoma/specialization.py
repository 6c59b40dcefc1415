"""Thoma parameters and specializations of symmetric and quasisymmetric functions.

A specialization is anything with a ``power_sum(k)`` method. Complete
homogeneous values come from Newton's recurrence and Schur values from the
Jacobi-Trudi determinant, so formal alphabets (A - B + γE, qX - X, ...) are
handled by the same code path as honest ones.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, prod
from numbers import Rational
from typing import Callable, Sequence, Union

from .partitions import comaj, descent_set, n_statistic, hook_lengths

Scalar = Union[Fraction, float]
FLOAT_TOL = 1e-12


class ScalarMode(enum.Enum):
    EXACT = "exact"
    FLOAT = "float"


def to_scalar(x, mode: ScalarMode = ScalarMode.EXACT) -> Scalar:
    if mode is ScalarMode.FLOAT:
        return float(x)
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (Rational, str)):
        return Fraction(x)
    raise TypeError(f"exact mode requires rational input, got {x!r}")


def _is_exact(*xs) -> bool:
    return all(isinstance(x, Rational) for x in xs)


# ------------------------------------------------------------- alphabets

@dataclass(frozen=True)
class Finite:
    """Finitely many letters, weakly decreasing and nonnegative."""
    values: tuple = ()

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if any(v < 0 for v in vals):
            raise ValueError(f"letters must be nonnegative: {vals}")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise ValueError(f"letters must be weakly decreasing: {vals}")

    def total(self):
        return sum(self.values, start=self.values[0] * 0) if self.values else 0

    def power_sum(self, k: int):
        return sum((v ** k for v in self.values), start=0)

    def letters(self, count: int | None = None) -> tuple:
        return self.values if count is None else self.values[:count]

    @property
    def is_empty(self) -> bool:
        return not any(self.values)

    @property
    def exact(self) -> bool:
        return _is_exact(*self.values)

    def __str__(self):
        return "[" + ",".join(str(v) for v in self.values) + "]"


@dataclass(frozen=True)
class Geometric:
    """Letters a, aq, aq^2, ... with 0 <= q < 1."""
    scale: Scalar
    ratio: Scalar

    def __post_init__(self):
        if self.scale < 0 or not (0 <= self.ratio < 1):
            raise ValueError(f"need a >= 0 and 0 <= q < 1, got a={self.scale}, q={self.ratio}")

    def total(self):
        return self.scale / (1 - self.ratio)

    def power_sum(self, k: int):
        return self.scale ** k / (1 - self.ratio ** k)

    def letters(self, count: int) -> tuple:
        return tuple(self.scale * self.ratio ** i for i in range(count))

    @property
    def is_empty(self) -> bool:
        return self.scale == 0

    @property
    def exact(self) -> bool:
        return _is_exact(self.scale, self.ratio)

    def __str__(self):
        return f"geom({self.scale},{self.ratio})"


Alphabet = Union[Finite, Geometric]


@dataclass(frozen=True)
class ThomaParameter:
    """A point ω = (α, β) of the Thoma simplex; γ is derived."""
    alpha: Alphabet = field(default_factory=Finite)
    beta: Alphabet = field(default_factory=Finite)

    def __post_init__(self):
        g = self.gamma
        tol = 0 if self.exact else FLOAT_TOL
        if g < -tol:
            raise ValueError(f"Σα + Σβ exceeds 1 (γ = {g})")

    @property
    def exact(self) -> bool:
        return self.alpha.exact and self.beta.exact

    @property
    def mode(self) -> ScalarMode:
        return ScalarMode.EXACT if self.exact else ScalarMode.FLOAT

    @property
    def gamma(self):
        g = 1 - self.alpha.total() - self.beta.total()
        if self.exact:
            return Fraction(g)
        g = float(g)
        return 0.0 if abs(g) < FLOAT_TOL else g

    def one(self):
        return Fraction(1) if self.exact else 1.0

    def power_sum(self, k: int):
        """p_k(A - B + γE)."""
        if k < 1:
            raise ValueError("k must be >= 1")
        if k == 1:
            return self.one()
        sign = 1 if k % 2 else -1
        return self.one() * (self.alpha.power_sum(k) + sign * self.beta.power_sum(k))

    def swap(self) -> "ThomaParameter":
        """Exchange α and β (the involution ω ↦ ω')."""
        return ThomaParameter(self.beta, self.alpha)

    def __str__(self):
        return f"alpha={self.alpha} beta={self.beta} gamma={self.gamma}"


def thoma(alpha=(), beta=(), exact: bool = True) -> ThomaParameter:
    """Build a ThomaParameter from lists of letters (or ready alphabets)."""
    mode = ScalarMode.EXACT if exact else ScalarMode.FLOAT

    def conv(x):
        if isinstance(x, (Finite, Geometric)):
            return x
        return Finite(tuple(to_scalar(v, mode) for v in x))
    return ThomaParameter(conv(alpha), conv(beta))


ZERO = ThomaParameter()


def geometric(scale, ratio, exact: bool = True) -> Geometric:
    mode = ScalarMode.EXACT if exact else ScalarMode.FLOAT
    return Geometric(to_scalar(scale, mode), to_scalar(ratio, mode))


class PowerSums:
    """A specialization given directly by k ↦ p_k."""

    def __init__(self, fn: Callable[[int], Scalar], name: str = "custom"):
        self._fn = fn
        self.name = name

    def power_sum(self, k: int):
        return self._fn(k)

    def __repr__(self):
        return f"PowerSums({self.name})"


# --------------------------------------------------- symmetric functions

def power_sum(omega, k: int):
    return omega.power_sum(k)


p_k = power_sum


def h_from_powersums(ps: Sequence[Scalar]) -> list:
    """h_0..h_K from p_1..p_K via k h_k = Σ p_i h_{k-i}."""
    one = ps[0] * 0 + 1 if ps else 1
    h = [one]
    for k in range(1, len(ps) + 1):
        h.append(sum(ps[i - 1] * h[k - i] for i in range(1, k + 1)) / k)
    return h


@lru_cache(maxsize=4096)
def _complete(omega, k: int) -> tuple:
    return tuple(h_from_powersums([omega.power_sum(i) for i in range(1, k + 1)]))


def complete(omega, k: int) -> tuple:
    """(h_0, ..., h_k) at the specialization."""
    return _complete(omega, k)


def h_k(omega, k: int):
    return complete(omega, k)[k] if k >= 0 else 0


def determinant(m: list[list]):
    """Gaussian elimination; exact for Fractions, partial pivoting for floats."""
    a = [list(r) for r in m]
    n = len(a)
    if n == 0:
        return 1
    det = a[0][0] * 0 + 1
    for c in range(n):
        piv = max(range(c, n), key=lambda r: abs(a[r][c]))
        if a[piv][c] == 0:
            return det * 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] * inv
            if f:
                row_c = a[c]
                a[r] = [x - f * y for x, y in zip(a[r], row_c)]
    return det


def schur_from_h(lam, h: Sequence) -> Scalar:
    """Jacobi-Trudi det(h_{λ_i - i + j}); ``h`` must reach index |λ|."""
    lam = tuple(lam)
    ell = len(lam)
    zero = h[0] * 0

    def hh(k):
        return h[k] if 0 <= k else zero
    return determinant([[hh(lam[i] - i + j) for j in range(ell)] for i in range(ell)])


def schur(lam, omega) -> Scalar:
    lam = tuple(lam)
    if not lam:
        return complete(omega, 0)[0]
    return _schur(lam, omega)


@lru_cache(maxsize=1 << 16)
def _schur(lam, omega):
    n = sum(lam)
    return schur_from_h(lam, complete(omega, n + len(lam)))


def schur_hook_q(lam, q) -> Scalar:
    """s_λ(1, q, q^2, ...) = q^{n(λ)} / ∏ (1 - q^h)."""
    return q ** n_statistic(lam) / prod((1 - q ** h for h in hook_lengths(lam)), start=q * 0 + 1)


# ----------------------------------------------------- quasisymmetric L_c

def fundamental_finite(c, letters: Sequence) -> Scalar:
    """L_c on finitely many ordered letters.

    f[j] holds the sum over admissible index sequences of the current prefix
    ending at letter j; strictness is imposed across descents of c.
    """
    c = tuple(c)
    n = sum(c)
    if n == 0:
        return 1
    letters = list(letters)
    if not letters:
        return 0
    desc = descent_set(c)
    f = list(letters)
    for pos in range(1, n):
        strict = pos in desc
        acc = 0
        g = []
        for j, x in enumerate(letters):
            if not strict:
                acc = acc + f[j]
            g.append(x * acc)
            if strict:
                acc = acc + f[j]
        f = g
    return sum(f, start=0)


def fundamental_geometric(c, a, q) -> Scalar:
    """L_c(a, aq, aq^2, ...) = a^n q^{comaj(c)} / ∏_{i<=n} (1 - q^i)."""
    n = sum(c)
    return a ** n * q ** comaj(c) / prod((1 - q ** i for i in range(1, n + 1)), start=q * 0 + 1)


def L_c(c, alphabet: Alphabet) -> Scalar:
    if sum(c) == 0:
        return 1
    if isinstance(alphabet, Geometric):
        return fundamental_geometric(c, alphabet.scale, alphabet.ratio)
    return _fundamental_cached(tuple(c), alphabet.values)


@lru_cache(maxsize=1 << 16)
def _fundamental_cached(c, values):
    return fundamental_finite(c, values)


def weakly_increasing_count(n: int, d: int) -> int:
    return comb(n + d - 1, n)
