import io
from fractions import Fraction as F
from math import comb, factorial, prod

import numpy as np
import pytest

from thoma.harness.selftest import reference_omegas
from thoma.measures import (DegenerateStateError, conjugation_symmetric, expect_sigma,
                            growth_chain_marginal, growth_chain_step, harmonicity_check,
                            p_measure, pushforward, pushforward_check, q_measure,
                            transition_weights)
from thoma.partitions import CapacityError, dim_hook, partitions_of
from thoma.shuffle_rsk import comaj_perm, inverse, recoils
from thoma.specialization import ThomaParameter, ZERO, geometric, thoma

OMEGAS = reference_omegas()


def q_factorial(n, q):
    return prod((1 - q ** i for i in range(1, n + 1)), start=F(1)) / (1 - q) ** n


@pytest.mark.parametrize("key", list(OMEGAS))
def test_normalization(key):
    for n in range(11):
        assert p_measure(n, OMEGAS[key]).total() == 1


def test_plancherel():
    for n in range(1, 8):
        pm = p_measure(n, ZERO)
        for lam in partitions_of(n):
            assert pm[lam] == F(dim_hook(lam) ** 2, factorial(n))


def test_small_examples():
    pm = p_measure(2, thoma([F(1, 2), F(1, 2)]))
    assert pm[(2,)] == F(3, 4) and pm[(1, 1)] == F(1, 4)
    for om in OMEGAS.values():
        assert p_measure(1, om).weights == {(1,): 1}
    with pytest.raises(CapacityError):
        p_measure(13, ZERO)


def test_q_measure_uniform():
    qm = q_measure(4, ZERO)
    assert set(qm.weights.values()) == {F(1, 24)}


@pytest.mark.parametrize("d", [1, 2, 3])
def test_q_measure_uniform_letters(d):
    n = 5
    qm = q_measure(n, thoma([F(1, d)] * d))
    for s, w in qm.weights.items():
        assert w == F(comb(n - 1 + d - len(recoils(s)), n), d ** n)


def test_q_measure_geometric():
    q = F(1, 3)
    n = 5
    qm = q_measure(n, ThomaParameter(geometric(1 - q, q)))
    for s, w in qm.weights.items():
        assert w == q ** comaj_perm(inverse(s)) / q_factorial(n, q)


@pytest.mark.parametrize("key", list(OMEGAS))
def test_pushforward(key):
    for n in range(1, 7):
        assert pushforward_check(n, OMEGAS[key])
    assert q_measure(5, OMEGAS[key]).total() == 1


def test_pushforward_plancherel_fibers():
    for n in range(1, 7):
        push = pushforward(q_measure(n, ZERO))
        for lam in partitions_of(n):
            assert push[lam] * factorial(n) == dim_hook(lam) ** 2


def test_pushforward_float():
    om = thoma([0.6, 0.25], [0.1], exact=False)
    rep = pushforward_check(5, om)
    assert rep.ok and max(abs(r) for r in rep.residuals.values()) < 1e-12


def test_harmonicity():
    assert harmonicity_check(thoma([F(2, 3), F(1, 3)]), 9)
    assert harmonicity_check(OMEGAS["((1/2),(1/4)), gamma=1/4"], 8)


def test_expectations():
    lhs, rhs = expect_sigma(4, thoma([F(2, 3), F(1, 3)]), (2,))
    assert lhs == rhs == F(20, 3)
    for n in range(1, 7):
        assert expect_sigma(n, OMEGAS["0"], (1,)) == (n, n)
    assert expect_sigma(3, OMEGAS["0"], (2, 2)) == (0, 0)
    for om in OMEGAS.values():
        for mu in [(2,), (3,), (2, 1), (2, 2), (4,)]:
            lhs, rhs = expect_sigma(6, om, mu)
            assert lhs == rhs


def test_conjugation_symmetry():
    om = thoma([F(1, 2), F(1, 6)], [F(1, 4)])
    assert conjugation_symmetric(6, om)


def test_growth_chain():
    assert transition_weights((), ZERO) == {(1,): 1}
    for om in OMEGAS.values():
        for n in range(9):
            gm, pm = growth_chain_marginal(n, om), p_measure(n, om)
            for lam in set(gm.weights) | set(pm.weights):
                assert gm[lam] == pm[lam]
    # one-letter α kills every shape with a second row
    with pytest.raises(DegenerateStateError):
        transition_weights((1, 1), thoma([F(1)]))


def test_growth_chain_step_support():
    rng = np.random.default_rng(3)
    om = thoma([F(1, 2), F(1, 2)])
    lam = ()
    for _ in range(30):
        lam = growth_chain_step(lam, om, rng)
        assert len(lam) <= 2
    assert sum(lam) == 30


def test_csv():
    buf = io.StringIO()
    p_measure(3, ZERO).to_csv(buf)
    assert buf.getvalue().splitlines()[0] == "partition,weight"
    buf = io.StringIO()
    q_measure(3, ZERO).to_csv(buf)
    assert "123,1/6" in buf.getvalue()
