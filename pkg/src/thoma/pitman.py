"""Path transforms: the min/max-plus operators, D_d, T_d, G_d and Pitman operators.

A path is an array of shape (..., n+1, d): time runs along the second to last
axis and coordinates along the last. Leading axes are batch axes, so every
operator here works on one path or on a stack of them. Integer paths use
int64; rational paths use object arrays of Fractions.

Orientation. With the coordinate convention W(k+1) - W(k) = e_{w_k}, the
operators below track Schensted insertion of the *reversed* word: G_d of the
path of w_1..w_k is the shape of P(w_k ... w_1), and the m_ij formula reads
the rows of P(reversed w). Feeding the path of the complemented word
(letter a moved to coordinate d + 1 - a) therefore gives the row-insertion
shape process of w itself, which is what :func:`schensted_path` builds.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class PathError(ValueError):
    pass


def word_path(w, d: int) -> np.ndarray:
    """Positions W(0..n) with W(k) - W(k-1) = e_{w_k}."""
    w = np.asarray(w, dtype=np.int64)
    if w.size and (w.min() < 1 or w.max() > d):
        raise PathError(f"letters must lie in 1..{d}")
    steps = np.zeros(w.shape + (d,), np.int64)
    if w.size:
        np.put_along_axis(steps, (w - 1)[..., None], 1, axis=-1)
    start = np.zeros(w.shape[:-1] + (1, d), np.int64) if w.ndim else np.zeros((1, d), np.int64)
    return np.concatenate([start, np.cumsum(steps, axis=-2)], axis=-2)


def schensted_path(w, d: int) -> np.ndarray:
    """Path whose G_d transform is the row-insertion shape process of w."""
    return word_path(d + 1 - np.asarray(w, dtype=np.int64), d)


def _check(x, y):
    if np.shape(x) != np.shape(y):
        raise PathError(f"length mismatch: {np.shape(x)} vs {np.shape(y)}")


def yup(x, y):
    """(x ⊼ y)(k) = min_{j<=k} (x(j) - y(j)) + y(k)."""
    _check(x, y)
    return np.minimum.accumulate(x - y, axis=-1) + y


def ydown(x, y):
    """(x ⊻ y)(k) = max_{j<=k} (x(j) - y(j)) + y(k)."""
    _check(x, y)
    return np.maximum.accumulate(x - y, axis=-1) + y


def yup_all(*xs):
    acc = xs[0]
    for x in xs[1:]:
        acc = yup(acc, x)
    return acc


def _series(W):
    return [W[..., i] for i in range(W.shape[-1])]


def d_op(xs: list) -> list:
    """D_d(x_1..x_d) = (x_1, x_1 ⊼ x_2, (x_1 ⊼ x_2) ⊼ x_3, ...)."""
    out, acc = [xs[0]], xs[0]
    for x in xs[1:]:
        acc = yup(acc, x)
        out.append(acc)
    return out


def t_op(xs: list) -> list:
    """T_d(x_1..x_d) = (x_2 ⊻ x_1, x_3 ⊻ (x_1 ⊼ x_2), ..., x_d ⊻ (x_1 ⊼ ... ⊼ x_{d-1}))."""
    out, acc = [], xs[0]
    for x in xs[1:]:
        out.append(ydown(x, acc))
        acc = yup(acc, x)
    return out


def d_iterates(W) -> list[list]:
    """[D^1 W, D^2 W, ..., D^d W]; D^i W has d - i + 1 coordinates."""
    cur = _series(W)
    out = []
    while cur:
        out.append(d_op(cur))
        cur = t_op(cur)
    return out


def g_d(W) -> np.ndarray:
    """G_d(W) = ((D^d W)_1, (D^{d-1} W)_2, ..., (D^1 W)_d)."""
    W = np.asarray(W)
    d = W.shape[-1]
    ds = d_iterates(W)
    return np.stack([ds[d - j - 1][j] for j in range(d)], axis=-1)


def row_contents_from_path(W) -> np.ndarray:
    """m_ij = (D^{j-i+1} W)_i(n) - (D^{j-i} W)_i(n) as a d x d upper triangular array."""
    W = np.asarray(W)
    d = W.shape[-1]
    ds = d_iterates(W)
    m = np.zeros(W.shape[:-2] + (d, d), dtype=W.dtype)
    for i in range(d):
        for j in range(i, d):
            a = ds[j - i][i][..., -1]
            b = ds[j - i - 1][i][..., -1] if j > i else 0
            m[..., i, j] = a - b
    return m


def row_contents(w, d: int) -> np.ndarray:
    """m[i-1, j-1] = number of letters j in row i of P(w)."""
    return row_contents_from_path(word_path(np.asarray(w)[..., ::-1], d))


def shape_process_pitman(w, d: int) -> np.ndarray:
    """Row lengths of P(w_1..w_k) for k = 0..n, via G_d."""
    return g_d(schensted_path(w, d))


# --------------------------------------------------------- Pitman operators

def pitman_op(i: int, w):
    """(P_i w)(t) = w(t) - min_{s<=t} <δ_i, w(s)> δ_i with δ_i = e_i - e_{i+1} (1-based i)."""
    w = np.asarray(w)
    d = w.shape[-1]
    if not 1 <= i <= d - 1:
        raise IndexError(f"P_{i} needs 1 <= i <= {d - 1}")
    z = w[..., i - 1] - w[..., i]
    m = np.minimum.accumulate(z, axis=-1)
    out = w.copy()
    out[..., i - 1] = out[..., i - 1] - m
    out[..., i] = out[..., i] + m
    return out


def apply_word(ops, w):
    """Apply P_{ops[0]} P_{ops[1]} ... (rightmost first)."""
    for i in reversed(ops):
        w = pitman_op(i, w)
    return w


def longest_word(d: int) -> list[int]:
    """Reduced word of ω_0 read as P_1 (P_2 P_1) ... (P_{d-1} ... P_1)."""
    return [i for top in range(1, d) for i in range(top, 0, -1)]


def pitman_w0(w):
    return apply_word(longest_word(np.asarray(w).shape[-1]), w)


@dataclass
class BraidReport:
    d: int
    trials: int
    braid_ok: bool
    commute_ok: bool
    idempotent_ok: bool

    @property
    def ok(self) -> bool:
        return self.braid_ok and self.commute_ok and self.idempotent_ok


def random_integer_paths(trials: int, n: int, d: int, rng: np.random.Generator, span: int = 3) -> np.ndarray:
    steps = rng.integers(-span, span + 1, size=(trials, n, d))
    start = np.zeros((trials, 1, d), np.int64)
    return np.concatenate([start, np.cumsum(steps, axis=1)], axis=1)


def random_rational_paths(trials: int, n: int, d: int, rng: np.random.Generator, den: int = 6) -> np.ndarray:
    from fractions import Fraction
    ints = random_integer_paths(trials, n, d, rng, span=2 * den)
    return np.vectorize(lambda v: Fraction(int(v), den), otypes=[object])(ints)


def braid_check(d: int, trials: int, rng: np.random.Generator, n: int = 100, rational: bool = False) -> BraidReport:
    """Braid, commutation and idempotence relations on random skip-free paths.

    Rational paths are skip-free paths on the lattice hZ^d for a random
    rational h; arbitrary rational jumps are covered by :func:`pl_braid_check`.
    """
    if d > 5:
        raise ValueError("braid checks are run for d <= 5")
    scale = 1
    if rational:
        from fractions import Fraction
        scale = Fraction(int(rng.integers(1, 20)), int(rng.integers(1, 20)))
    W = random_skip_free_paths(trials, n, d, rng, scale)
    braid = all(np.array_equal(apply_word([i, i + 1, i], W), apply_word([i + 1, i, i + 1], W))
                for i in range(1, d - 1))
    comm = all(np.array_equal(apply_word([i, j], W), apply_word([j, i], W))
               for i in range(1, d) for j in range(i + 2, d))
    idem = all(np.array_equal(pitman_op(i, pitman_op(i, W)), pitman_op(i, W)) for i in range(1, d))
    return BraidReport(d, trials, braid, comm, idem)


# ------------------------------------------------------------ two letters

def two_shuffle_series(w):
    """X_k = 3k - 2(b_1 + ... + b_k) and S_k = max_{j<=k} X_j, k = 0..n."""
    b = np.asarray(w, dtype=np.int64)
    if b.size and not np.isin(b, (1, 2)).all():
        raise PathError("two-letter words only")
    zero = np.zeros(b.shape[:-1] + (1,), np.int64)
    X = np.concatenate([zero, np.cumsum(3 - 2 * b, axis=-1)], axis=-1)
    S = np.maximum.accumulate(X, axis=-1)
    return X, S


def two_shuffle_decomposition(w):
    """(m11, m12) along the word: ones in row 1 and twos in row 1 of P(w_1..w_k)."""
    X, S = two_shuffle_series(w)
    k = np.arange(X.shape[-1])
    return (k + X) // 2, S - X


def two_shuffle_first_row(w):
    """ℓ_k = k/2 + (2 S_k - X_k)/2, returned as an integer array."""
    X, S = two_shuffle_series(w)
    k = np.arange(X.shape[-1])
    return (k + 2 * S - X) // 2


# ------------------------------------------- continuous piecewise-linear paths
#
# The discrete operators above agree with the continuous-time ones only while
# each root coordinate moves by at most one lattice unit per step. For
# arbitrary rational paths we work with the piecewise-linear interpolation
# and insert a node wherever a running minimum starts moving inside a segment.

@dataclass(frozen=True)
class PLPath:
    times: tuple
    points: tuple  # tuple of d-tuples

    @property
    def d(self) -> int:
        return len(self.points[0])

    def at(self, t):
        ts = self.times
        if t <= ts[0]:
            return self.points[0]
        for k in range(1, len(ts)):
            if t <= ts[k]:
                t0, t1 = ts[k - 1], ts[k]
                lam = (t - t0) / (t1 - t0)
                return tuple(a + lam * (b - a) for a, b in zip(self.points[k - 1], self.points[k]))
        return self.points[-1]


def pl_from_positions(positions) -> PLPath:
    from fractions import Fraction
    pts = tuple(tuple(Fraction(x) for x in row) for row in positions)
    return PLPath(tuple(Fraction(k) for k in range(len(pts))), pts)


def pl_pitman_op(i: int, w: PLPath) -> PLPath:
    """Continuous-time P_i on a piecewise-linear path (exact for rational nodes)."""
    d = w.d
    if not 1 <= i <= d - 1:
        raise IndexError(f"P_{i} needs 1 <= i <= {d - 1}")

    def z(p):
        return p[i - 1] - p[i]

    def shifted(p, m):
        q = list(p)
        q[i - 1] -= m
        q[i] += m
        return tuple(q)

    times, pts = [w.times[0]], [shifted(w.points[0], z(w.points[0]))]
    m = z(w.points[0])
    for k in range(1, len(w.times)):
        t0, t1 = w.times[k - 1], w.times[k]
        p0, p1 = w.points[k - 1], w.points[k]
        z0, z1 = z(p0), z(p1)
        if z1 < m < z0:
            lam = (z0 - m) / (z0 - z1)
            tc = t0 + lam * (t1 - t0)
            pc = tuple(a + lam * (b - a) for a, b in zip(p0, p1))
            times.append(tc)
            pts.append(shifted(pc, m))
        m = min(m, z1)
        times.append(t1)
        pts.append(shifted(p1, m))
    return PLPath(tuple(times), tuple(pts))


def pl_apply_word(ops, w: PLPath) -> PLPath:
    for i in reversed(ops):
        w = pl_pitman_op(i, w)
    return w


def pl_equal(a: PLPath, b: PLPath) -> bool:
    """Equality as functions of time: compare on the union of both node sets."""
    ts = sorted(set(a.times) | set(b.times))
    return all(a.at(t) == b.at(t) for t in ts)


def pl_braid_check(d: int, trials: int, rng: np.random.Generator, n: int = 30, den: int = 5) -> bool:
    ok = True
    for W in random_rational_paths(trials, n, d, rng, den=den):
        w = pl_from_positions(W)
        for i in range(1, d - 1):
            ok &= pl_equal(pl_apply_word([i, i + 1, i], w), pl_apply_word([i + 1, i, i + 1], w))
        for i in range(1, d):
            for j in range(i + 2, d):
                ok &= pl_equal(pl_apply_word([i, j], w), pl_apply_word([j, i], w))
    return bool(ok)


def random_skip_free_paths(trials: int, n: int, d: int, rng: np.random.Generator, scale=1) -> np.ndarray:
    """Paths with steps ±e_k: every root coordinate moves by at most one unit per step."""
    steps = np.zeros((trials, n, d), np.int64)
    idx = rng.integers(0, d, size=(trials, n))
    sign = rng.choice(np.array([-1, 1]), size=(trials, n))
    np.put_along_axis(steps, idx[..., None], sign[..., None], axis=-1)
    W = np.concatenate([np.zeros((trials, 1, d), np.int64), np.cumsum(steps, axis=1)], axis=1)
    if scale != 1:
        W = W.astype(object) * scale
    return W
