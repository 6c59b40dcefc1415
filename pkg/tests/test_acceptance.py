"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Statistical criteria run at their full sample sizes with the seed pinned
below; thresholds are |z| <= 4 and p > 1e-3, never adjusted after the fact.
"""
import os
import time
from fractions import Fraction as F

import pytest

from thoma.harness import experiments as ex
from thoma.harness import selftest
from thoma.specialization import thoma

SEED = 2024
WORKERS = os.cpu_count() or 1
TWO_THIRDS = thoma([F(2, 3), F(1, 3)])


def timed(fn, *args, **kw):
    t0 = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - t0


def describe(checks) -> str:
    parts = []
    for c in checks:
        z = f" z={c.z:+.2f}" if c.z is not None else ""
        emp = f"{c.empirical:.6g}" if isinstance(c.empirical, float) else str(c.empirical)
        parts.append(f"{c.name}={emp}{z}{'' if c.verdict else ' (fail)'}")
    return "; ".join(parts)


# ------------------------------------------------------------------- exact

def test_c01_normalization(record):
    (ok, detail), secs = timed(selftest.normalization, 10)
    assert record(1, ok and secs < 30, f"{detail}, {secs:.1f}s")


def test_c02_pushforward(record):
    (ok, detail), secs = timed(selftest.pushforward, 7)
    assert record(2, ok and secs < 60, f"{detail}, {secs:.1f}s")


def test_c03_orthogonality(record):
    (ok, detail), _ = timed(selftest.orthogonality, 8)
    assert record(3, ok, detail)


def test_c04_observables(record):
    (ok, detail), _ = timed(selftest.wassermann_and_products, 8, 7)
    assert record(4, ok, detail)


def test_c05_expectations(record):
    (ok, detail), _ = timed(selftest.expectations, 8, 4)
    assert record(5, ok, detail)


def test_c06_pitman_rsk(record):
    (ok, detail), secs = timed(selftest.pitman_rsk, 3, 8, 10_000, 10_000, SEED)
    assert record(6, ok and secs < 120, f"{detail}, {secs:.1f}s")


def test_c07_markov_chain(record):
    (ok, detail), _ = timed(selftest.markov_chain, 8)
    assert record(7, ok, detail)


def test_c08_hecke(record):
    (ok, detail), _ = timed(selftest.hecke_layer)
    assert record(8, ok, detail)


# ------------------------------------------------------------- statistical

@pytest.mark.slow
def test_c09_lln(record):
    rep = ex.lln_experiment(TWO_THIRDS, [200, 800, 3200], 10 ** 5, SEED, WORKERS, cycles=(2,),
                            final_tol=0.01)
    checks = [rep.check("chi_2 error decreases"), rep.check("chi_2 error at n=3200")]
    detail = f"errors {checks[0].note}; final {checks[1].empirical:.3g} < 0.01"
    assert record(9, all(c.verdict for c in checks), detail)


@pytest.mark.slow
def test_c10_character_clt(record):
    rep, secs = timed(ex.clt_char_experiment, TWO_THIRDS, 2000, 10 ** 6, SEED, WORKERS, cycles=(2,))
    checks = [rep.check("cov(X_2,X_2)"), rep.check("k3(X_2)")]
    ok = all(c.verdict for c in checks) and secs < 600
    assert record(10, ok, f"{describe(checks)}, {secs:.0f}s")


@pytest.mark.slow
def test_c11_row_clt(record):
    rep = ex.clt_rows_experiment(TWO_THIRDS, 2000, 10 ** 5, SEED, WORKERS, rows=2)
    checks = [rep.check("cov(X_1,X_1)"), rep.check("cov(X_1,X_2)"), rep.check("cov(X_2,X_2)")]
    assert record(11, all(c.verdict for c in checks), describe(checks))


@pytest.mark.slow
def test_c12_bessel(record):
    rep = ex.bessel_experiment(10 ** 4, 10 ** 5, SEED, WORKERS)
    checks = [rep.check("KS vs Bessel-3"), rep.check("mean")]
    assert record(12, all(c.verdict for c in checks), describe(checks))


@pytest.mark.slow
def test_c13_gue(record):
    rep = ex.gue_experiment(3, 9000, 10 ** 5, SEED, WORKERS)
    checks = [rep.check("trace zero")]
    checks += [rep.check(f"E[Y_{i}]") for i in (1, 2, 3)]
    checks += [rep.check(f"E[Y_{i}Y_{j}]") for i in (1, 2, 3) for j in (1, 2, 3) if i <= j]
    assert record(13, all(c.verdict for c in checks), describe(checks))
