"""Deterministic chunked sampling of RSK shapes.

Samples are cut into consecutive index ranges whose size depends only on n
(never on the worker count). Chunk c draws from
``SeedSequence(seed, spawn_key=(c,))``, so the concatenated output is the
same for any number of workers.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor

import numpy as np

from ..measures import growth_chain_step
from ..partitions import Partition
from ..shuffle_rsk import batch_shapes, is_alpha_only, sample_words
from ..specialization import Finite, ThomaParameter

CHUNK_LETTERS = 2_000_000
GROWTH_CAP = 60


def chunk_plan(samples: int, n: int) -> list[tuple[int, int]]:
    size = max(1, min(samples, CHUNK_LETTERS // max(n, 1)))
    return [(start, min(size, samples - start)) for start in range(0, samples, size)]


def chunk_rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(index,)))


def _rsk_chunk(args):
    n, omega, size, seed, index, width, counts = args
    rng = chunk_rng(seed, index)
    if not counts:
        return batch_shapes(n, omega, size, rng, width), None
    from .._kernels import word_shapes
    d = len(omega.alpha.values)
    w = sample_words(n, omega, size, rng)
    shapes = word_shapes(w, d)
    letters = np.stack([(w == a).sum(axis=1) for a in range(1, d + 1)], axis=1)
    return shapes, letters


def _growth_chunk(args):
    n, omega, size, seed, index, width, _ = args
    rng = chunk_rng(seed, index)
    out = np.zeros((size, width), np.int64)
    for s in range(size):
        lam = Partition(())
        for _ in range(n):
            lam = growth_chain_step(lam, omega, rng)
        out[s, :len(lam)] = lam
    return out, None


def sample_shapes(n: int, omega: ThomaParameter, samples: int, seed: int, workers: int = 1,
                  width: int | None = None, method: str = "rsk", letter_counts: bool = False):
    """RSK shapes of ``samples`` ω-shuffles of size n, as a (samples, width) array.

    With ``letter_counts`` (finite α, β = γ = 0 only) the per-letter counts of
    the underlying words are returned as a second array.
    """
    if seed is None:
        raise ValueError("a seed is required")
    finite_words = is_alpha_only(omega) and isinstance(omega.alpha, Finite)
    if width is None:
        width = len(omega.alpha.values) if finite_words else n
    if letter_counts and not finite_words:
        raise ValueError("letter counts need a finite α with β = 0 and γ = 0")
    if method == "growth":
        if n > GROWTH_CAP:
            raise ValueError(f"growth-chain sampling is limited to n <= {GROWTH_CAP}")
        fn = _growth_chunk
    elif method == "rsk":
        fn = _rsk_chunk
    else:
        raise ValueError(f"unknown sampling method {method!r}")
    jobs = [(n, omega, size, seed, c, width, letter_counts)
            for c, (_, size) in enumerate(chunk_plan(samples, n))]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(workers) as ex:
            parts = list(ex.map(fn, jobs))
    else:
        parts = [fn(j) for j in jobs]
    shapes = np.concatenate([p[0] for p in parts]) if parts else np.zeros((0, width), np.int64)
    if letter_counts:
        return shapes, np.concatenate([p[1] for p in parts])
    return shapes
