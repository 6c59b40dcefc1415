from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from thoma.characters import mn_character, z_mu
from thoma.hecke import (QtParams, h_to_p, markov_hook_content, markov_trace,
                         markov_trace_weight, q_character, q_character_table, q_frobenius,
                         qt_hook_content, qt_inverse_symmetric, qt_permutation_measure,
                         qt_plancherel, qt_plancherel_residuals, qt_power_sum, x_qz, y_qz)
from thoma.measures import p_measure, pushforward, q_measure
from thoma.partitions import CapacityError, dim_hook, partitions_of, partitions_upto
from thoma.shuffle_rsk import comaj_perm, compose, inverse, longest_element
from thoma.specialization import PowerSums, complete, schur, schur_hook_q

Q, Z, T = F(1, 3), F(2, 7), F(2, 5)
rationals = st.fractions(min_value=F(1, 20), max_value=F(19, 20), max_denominator=20)


def q_factorial(n, q):
    out = F(1)
    for i in range(1, n + 1):
        out *= (1 - q ** i) / (1 - q)
    return out


def test_h_to_p():
    assert h_to_p((2,)) == {(2,): F(1, 2), (1, 1): F(1, 2)}
    for n in range(1, 7):
        # h_n = Σ_ν p_ν / z_ν
        assert h_to_p((n,)) == {nu: F(1, z_mu(nu)) for nu in partitions_of(n)}
    # ⟨h_μ, p_ν⟩ counts matrices: the coefficient of p_{1^n} in h_μ is 1/∏ μ_i!
    for mu in partitions_of(5):
        c = h_to_p(mu)[(1,) * 5]
        denom = 1
        for k in mu:
            denom *= factorial(k)
        assert c == F(1, denom)
    with pytest.raises(CapacityError):
        h_to_p((11,))


@settings(max_examples=20, deadline=None)
@given(rationals)
def test_trivial_q_character(q):
    for mu in partitions_of(5):
        assert q_character((5,), mu, q) == q ** (5 - len(mu))


def test_q_character_at_one():
    for lam in partitions_of(5):
        for mu in partitions_of(5):
            want = mn_character(lam, mu)
            assert q_character(lam, mu, 1) == want
            for eps in (1e-6, -1e-6):
                assert q_character(lam, mu, 1 + eps) == pytest.approx(want, abs=1e-4)


def test_q_character_table():
    tab = q_character_table(4, Q)
    assert tab[(4,), (2, 1, 1)] == Q
    assert tab[(1, 1, 1, 1), (1, 1, 1, 1)] == 1
    # the identity T_{1^n} acts with dimension dim λ
    for lam in partitions_of(4):
        assert tab[lam, (1, 1, 1, 1)] == dim_hook(lam)
    assert q_character_table(3, 1).matrix[0] == [1, 1, 1]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_q_frobenius(n):
    letters = [F(1, 2), F(1, 5), F(1, 7)]
    alph = PowerSums(lambda k: sum(x ** k for x in letters), "x")
    for mu in partitions_of(n):
        lhs = q_frobenius(mu, Q, letters)
        rhs = sum(q_character(lam, mu, Q) * schur(lam, alph) for lam in partitions_of(n))
        assert lhs == rhs


def test_y_alphabet():
    h = complete(y_qz(Q, Z), 8)
    for k in range(1, 9):
        assert h[k] == (Q - 1) * Z ** (k - 1)
    x = x_qz(Q, Z)
    for k in range(1, 6):
        assert y_qz(Q, Z).power_sum(k) == (Q ** k - 1) * x.power_sum(k)


@pytest.mark.parametrize("n", range(1, 7))
def test_markov_trace(n):
    for mu in partitions_of(n):
        assert markov_trace(mu, Q, Z) == Z ** (n - len(mu))


def test_markov_trace_other_point():
    q, z = F(3, 4), F(-1, 5)
    for mu in partitions_of(5):
        assert markov_trace(mu, q, z) == z ** (5 - len(mu))


def test_schur_paths_agree():
    for lam in partitions_upto(8):
        w = markov_trace_weight(lam, Q, Z)
        assert w.difference == 0 and w.value == markov_hook_content(lam, Q, Z)


def test_qt_params():
    with pytest.raises(ValueError):
        QtParams(F(1), F(1, 2))
    with pytest.raises(ValueError):
        QtParams(F(1, 2), F(3, 2))
    p = QtParams(Q, T)
    assert p.exact and p.omega.gamma == 0
    assert p.z == -(1 - Q) * (1 - T)


def test_qt_power_sums():
    p = QtParams(Q, T)
    for k in range(1, 9):
        assert qt_power_sum(k, Q, T) == p.omega.power_sum(k)


@pytest.mark.parametrize("n", range(1, 9))
def test_qt_plancherel(n):
    p = QtParams(Q, T)
    pm = qt_plancherel(n, p)
    assert pm.total() == 1
    assert not any(qt_plancherel_residuals(n, p).values())
    assert qt_inverse_symmetric(n, p)


def test_qt_t_equals_one():
    p = QtParams(Q, F(1))
    for n in range(1, 7):
        pm = qt_plancherel(n, p)
        for lam in partitions_of(n):
            assert pm[lam] == (1 - Q) ** n * dim_hook(lam) * schur_hook_q(lam, Q)


def test_qt_q_to_one():
    q, t = 1 - 1e-6, 0.3
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert qt_hook_content(lam, q, t) == pytest.approx(dim_hook(lam) ** 2 / factorial(n), abs=1e-3)
    pm = p_measure(5, QtParams(q, t).omega)
    for lam, w in pm.weights.items():
        assert w == pytest.approx(dim_hook(lam) ** 2 / 120, abs=1e-3)


@pytest.mark.parametrize("n", range(1, 6))
def test_qt_permutation_measure(n):
    p = QtParams(Q, T)
    qt = qt_permutation_measure(n, p)
    assert qt.total() == 1
    qm = q_measure(n, p.omega)
    for s, w in qt.weights.items():
        assert w == qm[inverse(s)]
    push = pushforward(qt)
    pm = qt_plancherel(n, p)
    assert all(push[lam] == pm[lam] for lam in partitions_of(n))


def test_qt_permutation_limits():
    n = 5
    one = qt_permutation_measure(n, QtParams(Q, F(1)))
    zero = qt_permutation_measure(n, QtParams(Q, F(0)))
    w0 = longest_element(n)
    for s in one.weights:
        assert one[s] == Q ** comaj_perm(s) / q_factorial(n, Q)
        assert zero[s] == Q ** comaj_perm(compose(s, w0)) / q_factorial(n, Q)
