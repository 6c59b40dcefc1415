from fractions import Fraction as F
from itertools import product
from math import comb, factorial, prod

import pytest
from hypothesis import given, settings, strategies as st

from thoma.partitions import compositions_of, dim_hook, descent_set, partitions_of
from thoma.specialization import (Finite, Geometric, PowerSums, ThomaParameter, ZERO, L_c,
                                  complete, fundamental_finite, fundamental_geometric,
                                  geometric, h_from_powersums, schur, schur_hook_q, thoma)


def ssyt_schur(lam, letters):
    """s_λ(x_1..x_N) by brute-force enumeration of semistandard fillings."""
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    N = len(letters)
    total = 0
    for fill in product(range(N), repeat=len(cells)):
        t = dict(zip(cells, fill))
        if all(t[i, j] <= t[i, j + 1] for i, j in cells if (i, j + 1) in t) and \
                all(t[i, j] < t[i + 1, j] for i, j in cells if (i + 1, j) in t):
            total += prod((letters[v] for v in fill), start=F(1))
    return total


def brute_fundamental(c, letters):
    n = sum(c)
    desc = descent_set(c)
    total = 0
    for idx in product(range(len(letters)), repeat=n):
        if all(idx[k] <= idx[k + 1] and (k + 1 not in desc or idx[k] < idx[k + 1]) for k in range(n - 1)):
            total += prod((letters[i] for i in idx), start=F(1))
    return total


def test_thoma_validation():
    with pytest.raises(ValueError):
        thoma([F(1, 3), F(1, 2)])
    with pytest.raises(ValueError):
        thoma([F(2, 3), F(1, 2)])
    with pytest.raises(ValueError):
        Geometric(F(1, 2), F(1))
    om = thoma([F(1, 2)], [F(1, 4)])
    assert om.gamma == F(1, 4)
    assert om.swap().alpha == om.beta
    assert ZERO.gamma == 1


def test_power_sums():
    assert thoma([F(1, 2), F(1, 2)]).power_sum(2) == F(1, 2)
    om = thoma([F(1, 2)], [F(1, 4)])
    assert om.power_sum(1) == 1
    assert om.power_sum(2) == F(1, 4) - F(1, 16)
    assert om.power_sum(3) == F(1, 8) + F(1, 64)
    for k in range(2, 6):
        assert ZERO.power_sum(k) == 0
    g = ThomaParameter(geometric(F(1, 2), F(1, 2)))
    assert g.power_sum(2) == F(1, 4) / (1 - F(1, 4))


def test_h_from_powersums():
    h = h_from_powersums([F(1)] + [F(0)] * 6)
    assert h == [F(1, factorial(k)) for k in range(8)]
    assert h_from_powersums([F(0)] * 4)[1:] == [0] * 4
    x = F(2, 7)
    assert h_from_powersums([x ** k for k in range(1, 6)]) == [x ** k for k in range(6)]


def test_schur_examples():
    for n in range(1, 7):
        for lam in partitions_of(n):
            assert schur(lam, ZERO) == F(dim_hook(lam), factorial(n))
    x = F(2, 5)
    om = thoma([x])
    n = 5
    assert schur((n,), om) == sum(x ** k * (1 - x) ** (n - k) / factorial(n - k) for k in range(n + 1))
    assert schur((2,), thoma([F(1, 2), F(1, 2)])) == F(3, 4)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(partitions_of(n))),
       st.lists(st.integers(1, 6), min_size=1, max_size=3))
def test_schur_matches_tableaux(lam, raw):
    total = sum(raw)
    letters = sorted((F(r, total) for r in raw), reverse=True)
    assert schur(lam, thoma(letters)) == ssyt_schur(lam, letters)


def test_schur_involution():
    # s_λ(A - B) = s_λ'(B - A) with γ = 0 on both sides
    om = thoma([F(1, 2), F(1, 6)], [F(1, 3)])
    from thoma.partitions import conjugate
    for lam in partitions_of(5):
        assert schur(lam, om) == schur(conjugate(lam), om.swap())


def test_schur_hook_q():
    q = F(1, 3)
    assert schur_hook_q((1,), q) == 1 / (1 - q)
    assert schur_hook_q((2,), q) == 1 / ((1 - q) * (1 - q ** 2))
    assert schur_hook_q((1, 1), q) == q / ((1 - q) * (1 - q ** 2))
    # principal specialization against the geometric alphabet a = 1
    geo = PowerSums(lambda k: 1 / (1 - q ** k), "1,q,q^2,...")
    for lam in partitions_of(5):
        assert schur(lam, geo) == schur_hook_q(lam, q)


def test_fundamental_examples():
    for d in (1, 2, 3):
        for n in range(1, 6):
            assert L_c((n,), Finite((F(1, d),) * d)) == F(comb(n + d - 1, n), d ** n)
    assert L_c((1,), Finite((F(1, 2), F(1, 3)))) == F(5, 6)
    q = F(1, 2)
    qfact = lambda n: prod((1 - q ** i for i in range(1, n + 1)), start=F(1)) / (1 - q) ** n
    from thoma.partitions import comaj
    for c in compositions_of(4):
        assert fundamental_geometric(c, 1 - q, q) == q ** comaj(c) / qfact(4)


@given(st.integers(1, 5).flatmap(lambda n: st.sampled_from(compositions_of(n))))
def test_fundamental_matches_bruteforce(c):
    letters = [F(1, 2), F(1, 3), F(1, 7)]
    assert fundamental_finite(c, letters) == brute_fundamental(c, letters)


def test_fundamental_geometric_truncation():
    for q in (0.5, 0.3, 0.1):
        trunc = [(1 - q) * q ** i for i in range(64)]
        for c in compositions_of(5):
            assert fundamental_finite(c, trunc) == pytest.approx(fundamental_geometric(c, 1 - q, q), abs=1e-12)


def test_fundamentals_sum_to_p1_power():
    # Σ_σ L_{c(σ)} is a sum over all words, hence p_1^n
    from itertools import permutations
    from thoma.shuffle_rsk import descent_composition
    letters = Finite((F(1, 2), F(1, 3), F(1, 6)))
    for n in range(1, 6):
        assert sum(L_c(descent_composition(s), letters) for s in permutations(range(1, n + 1))) == 1


def test_complete_cache_consistency():
    om = thoma([F(2, 3), F(1, 3)])
    h = complete(om, 6)
    assert h[0] == 1 and h[1] == 1
    assert h[2] == F(4, 9) + F(2, 9) + F(1, 9)


def test_float_mode():
    om = thoma([0.5, 0.25], exact=False)
    assert not om.exact
    assert schur((2, 1), om) == pytest.approx(float(schur((2, 1), thoma([F(1, 2), F(1, 4)]))), rel=1e-12)
