"""Permutations, RSK insertion and generalized riffle shuffles.

Permutations are plain tuples in one-line notation, 1-based.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .partitions import (CapacityError, Partition, Tableau, composition_of,
                         tableau_descents)
from .specialization import Finite, Geometric, ThomaParameter

Permutation = tuple
Word = tuple


# ----------------------------------------------------------- permutations

def is_permutation(s) -> bool:
    return sorted(s) == list(range(1, len(s) + 1))


def inverse(s) -> Permutation:
    inv = [0] * len(s)
    for i, v in enumerate(s, start=1):
        inv[v - 1] = i
    return tuple(inv)


def compose(s, t) -> Permutation:
    """(s t)(i) = s(t(i))."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def longest_element(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def descents(s) -> frozenset[int]:
    return frozenset(i for i in range(1, len(s)) if s[i - 1] > s[i])


def recoils(s) -> frozenset[int]:
    return descents(inverse(s))


def descent_composition(s):
    return composition_of(descents(s), len(s))


def recoil_composition(s):
    return composition_of(recoils(s), len(s))


def ribbon(s) -> list[tuple[int, ...]]:
    """The maximal increasing runs of s, left to right; their lengths give c(σ)."""
    runs, cur = [], []
    for i, v in enumerate(s):
        if cur and s[i - 1] > v:
            runs.append(tuple(cur))
            cur = []
        cur.append(v)
    if cur:
        runs.append(tuple(cur))
    return runs


def comaj_perm(s) -> int:
    n = len(s)
    return sum(n - d for d in descents(s))


def standardize(w) -> Permutation:
    """Renumber letters 1..n: smaller letters first, equal letters left to right."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


# -------------------------------------------------------------------- RSK

@dataclass(frozen=True)
class RskOutput:
    p: Tableau
    q: Tableau

    @property
    def shape(self) -> Partition:
        return self.p.shape


def _insert(rows: list[list[int]], a) -> int:
    """Row-insert a, returning the index of the row that grew."""
    for r, row in enumerate(rows):
        i = bisect.bisect_right(row, a)
        if i == len(row):
            row.append(a)
            return r
        row[i], a = a, row[i]
    rows.append([a])
    return len(rows) - 1


def rsk(w) -> RskOutput:
    p: list[list[int]] = []
    q: list[list[int]] = []
    for k, a in enumerate(w, start=1):
        r = _insert(p, a)
        if r == len(q):
            q.append([])
        q[r].append(k)
    return RskOutput(Tableau(p), Tableau(q))


def rsk_shape(w) -> Partition:
    rows: list[list[int]] = []
    for a in w:
        _insert(rows, a)
    return Partition(len(r) for r in rows)


def shape_process(w) -> list[Partition]:
    rows: list[list[int]] = []
    lengths: list[int] = []
    out = [Partition(())]
    for a in w:
        r = _insert(rows, a)
        if r == len(lengths):
            lengths.append(0)
        lengths[r] += 1
        out.append(Partition(lengths))
    return out


def greene_invariant(s, r: int) -> int:
    """Λ_1 + ... + Λ_r of the RSK shape."""
    return sum(rsk_shape(s)[:r])


def _longest_decreasing(seq) -> int:
    best = []
    for i, v in enumerate(seq):
        best.append(1 + max((best[j] for j in range(i) if seq[j] > v), default=0))
    return max(best, default=0)


def longest_decreasing(s) -> int:
    return _longest_decreasing(s)


def greene_bruteforce(s, r: int, cap: int = 10) -> int:
    """Largest union of r increasing subwords, by exhaustive search.

    A subword splits into at most r increasing subwords exactly when its
    longest decreasing subword has length <= r, so we scan all subsets.
    """
    n = len(s)
    if n > cap:
        raise CapacityError(f"brute-force Greene oracle is capped at n = {cap}")
    for size in range(n, -1, -1):
        for idx in combinations(range(n), size):
            if _longest_decreasing([s[i] for i in idx]) <= r:
                return size
    return 0


# --------------------------------------------------------------- sampling

def _geometric_index(u, q):
    # P(K >= k) = q^k; exact inversion of the geometric CDF
    if q == 0:
        return np.zeros_like(u, dtype=np.int64)
    return np.floor(np.log1p(-u) / math.log(q)).astype(np.int64)


def sample_labels(n: int, omega: ThomaParameter, size: int, rng: np.random.Generator):
    """i.i.d. labels as (kind, index) arrays of shape (size, n); kind 0=A, 1=B, 2=C."""
    u = rng.random((size, n))
    ta, tb = float(omega.alpha.total()), float(omega.beta.total())
    kind = np.where(u < ta, 0, np.where(u < ta + tb, 1, 2)).astype(np.int8)
    index = np.zeros((size, n), np.int64)
    for k, alph, lo, mass in ((0, omega.alpha, 0.0, ta), (1, omega.beta, ta, tb)):
        mask = kind == k
        if not mask.any():
            continue
        v = np.clip((u[mask] - lo) / mass, 0.0, np.nextafter(1.0, 0.0))
        if isinstance(alph, Geometric):
            index[mask] = _geometric_index(v, float(alph.ratio))
        else:
            cum = np.cumsum([float(x) for x in alph.values]) / mass
            index[mask] = np.minimum(np.searchsorted(cum, v, side="right"), len(cum) - 1)
    return kind, index


def labels_to_permutations(kind, index, rng: np.random.Generator) -> np.ndarray:
    """Read off σ: values go to classes in order A_1 < A_2 < ... < B_2 < B_1 < C.

    Inside an A class values increase left to right, inside a B class they
    decrease, and the C class gets a uniform random order. The B classes come
    in reverse order because the whole β part of the deck is turned over.
    """
    size, n = kind.shape
    pos = np.broadcast_to(np.arange(n), (size, n))
    primary = kind.astype(np.int64) * (1 << 40) + np.where(kind == 0, index, np.where(kind == 1, -index, 0))
    secondary = np.where(kind == 0, pos, np.where(kind == 1, -pos, 0)).astype(np.float64)
    c_mask = kind == 2
    if c_mask.any():
        secondary = secondary.copy()
        secondary[c_mask] = rng.random(int(c_mask.sum()))
    order = np.lexsort((secondary, primary), axis=-1)
    sigma = np.empty((size, n), np.int32)
    np.put_along_axis(sigma, order, np.broadcast_to(np.arange(1, n + 1, dtype=np.int32), (size, n)), axis=1)
    return sigma


def is_alpha_only(omega: ThomaParameter) -> bool:
    return omega.beta.is_empty and omega.gamma == 0


def sample_words(n: int, omega: ThomaParameter, size: int, rng: np.random.Generator) -> np.ndarray:
    """Letter words for ω with β = 0 and γ = 0; letter i+1 stands for the class A_{i+1}.

    Standardizing such a word gives the shuffle permutation, and its RSK shape
    equals the shape of that permutation.
    """
    if not is_alpha_only(omega):
        raise ValueError("words only describe shuffles with β = 0 and γ = 0")
    if isinstance(omega.alpha, Geometric):
        _, index = sample_labels(n, omega, size, rng)
        return (index + 1).astype(np.int32)
    from ._kernels import categorical_words
    cum = np.cumsum([float(x) for x in omega.alpha.values])
    cum /= cum[-1]
    return categorical_words(rng.random((size, n)), cum)


def sample_permutations(n: int, omega: ThomaParameter, size: int, rng: np.random.Generator) -> np.ndarray:
    """``size`` independent ω-shuffles as an int array of one-line notations."""
    kind, index = sample_labels(n, omega, size, rng)
    return labels_to_permutations(kind, index, rng)


def omega_shuffle(n: int, omega: ThomaParameter, rng: np.random.Generator) -> Permutation:
    return tuple(int(x) for x in sample_permutations(n, omega, 1, rng)[0])


def deck_shuffle(n: int, omega: ThomaParameter, rng: np.random.Generator) -> Permutation:
    """Literal deck simulation: split into blocks, flip β blocks, randomize the γ block, riffle."""
    kind, index = sample_labels(n, omega, 1, rng)
    labels = sorted(zip(kind[0].tolist(), index[0].tolist()))
    blocks: dict[tuple, int] = {}
    for lab in labels:
        blocks[lab] = blocks.get(lab, 0) + 1
    deck = list(range(1, n + 1))
    piles, start = [], 0
    # deck order: A_1, A_2, ..., then the β part turned over (..., B_2, B_1), then C
    for (k, _), size in sorted(blocks.items(), key=lambda kv: (kv[0][0], -kv[0][1] if kv[0][0] == 1 else kv[0][1])):
        pile = deck[start:start + size]
        start += size
        if k == 1:
            pile.reverse()
        elif k == 2:
            pile = [pile[i] for i in rng.permutation(size)]
        piles.append(pile)
    # drop cards one at a time, each pile chosen with probability ∝ its size
    out, tops = [], [0] * len(piles)
    remaining = [len(p) for p in piles]
    left = n
    while left:
        x = rng.integers(left)
        j = 0
        while x >= remaining[j]:
            x -= remaining[j]
            j += 1
        out.append(piles[j][tops[j]])
        tops[j] += 1
        remaining[j] -= 1
        left -= 1
    return tuple(out)


def batch_shapes(n: int, omega: ThomaParameter, size: int, rng: np.random.Generator,
                 width: int | None = None) -> np.ndarray:
    """RSK shapes of ``size`` ω-shuffles, as an (size, width) array of row lengths."""
    from ._kernels import rsk_shapes, word_shapes
    if is_alpha_only(omega) and isinstance(omega.alpha, Finite):
        d = len(omega.alpha.values)
        w = sample_words(n, omega, size, rng)
        shapes = word_shapes(w, d)
        if width is None or width == d:
            return shapes
        out = np.zeros((size, width), np.int64)
        k = min(width, d)
        out[:, :k] = shapes[:, :k]
        return out
    s = sample_permutations(n, omega, size, rng)
    return rsk_shapes(s, width or n)


def sigma2_from_shapes(shapes: np.ndarray) -> np.ndarray:
    """Σ_2(λ) = Σ_i λ_i (λ_i - 2i + 1) = 2 Σ_boxes (col - row), row-wise."""
    lam = shapes.astype(np.float64)
    i = np.arange(1, lam.shape[1] + 1)
    return (lam * (lam - 2 * i + 1)).sum(axis=1)


def tableau_descent_composition(t: Tableau):
    return composition_of(tableau_descents(t), t.shape.size)
