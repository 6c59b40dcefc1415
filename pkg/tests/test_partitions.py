from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from thoma.partitions import (CapacityError, Composition, OutOfShapeError, Partition, comaj,
                              compositions_of, conjugate, conjugate_composition, content,
                              covered_by, covers, descent_set, dim_hook, enumerate_syt,
                              hook_length, hook_lengths, n_statistic, partitions_of,
                              partitions_upto, restrict)

partitions = st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def count_partitions(n):
    # Euler's pentagonal recurrence, independent of the generator
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    lam = Partition((3, 1))
    assert lam == (3, 1) and hash(lam) == hash((3, 1))
    assert lam.size == 4 and lam.part(3) == 0
    assert (2, 2) not in lam and (1, 3) in lam and (2, 1) in lam


@pytest.mark.parametrize("lam, want", [((5, 4, 2, 2), (4, 4, 2, 2, 1)), ((), ()), ((3,), (1, 1, 1))])
def test_conjugate(lam, want):
    assert conjugate(lam) == want


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_hook_length():
    assert hook_length((5, 4, 2, 2), (1, 3)) == 4
    assert hook_length((1,), (1, 1)) == 1
    assert hook_length((5, 4, 2, 2), (1, 1)) == 8
    with pytest.raises(OutOfShapeError):
        hook_length((2, 1), (2, 2))


def test_content():
    assert content((1, 1)) == 0
    assert content((3, 1)) == 2
    assert content((1, 4)) == -3
    with pytest.raises(OutOfShapeError):
        content((3, 1), (2, 1))


@given(partitions)
def test_hooks_transpose(lam):
    assert sorted(hook_lengths(lam)) == sorted(hook_lengths(conjugate(lam)))


def test_dim_examples():
    assert dim_hook((3, 2)) == 5
    assert dim_hook((7,)) == 1
    assert dim_hook((2, 2)) == 2


@given(partitions)
def test_dim_counts_tableaux(lam):
    tabs = enumerate_syt(lam)
    assert len(tabs) == dim_hook(lam) == len(set(tabs))
    assert all(t.is_standard() and t.shape == lam for t in tabs)


def test_syt_examples():
    got = {t.rows for t in enumerate_syt((3, 2))}
    assert got == {((1, 2, 3), (4, 5)), ((1, 2, 4), (3, 5)), ((1, 2, 5), (3, 4)),
                   ((1, 3, 4), (2, 5)), ((1, 3, 5), (2, 4))}
    assert [t.rows for t in enumerate_syt((1,))] == [((1,),)]
    assert len(enumerate_syt((2, 1))) == 2
    with pytest.raises(CapacityError):
        enumerate_syt((20,))


def test_covers():
    assert set(covers((5, 4, 2, 2))) == {(6, 4, 2, 2), (5, 5, 2, 2), (5, 4, 3, 2), (5, 4, 2, 2, 1)}
    assert covers(()) == [(1,)]
    assert set(covered_by((2, 1))) == {(2,), (1, 1)}


@given(partitions)
def test_covers_inverse(lam):
    for mu in covers(lam):
        assert lam in covered_by(mu)
    # branching rule: dim Λ = Σ_{λ ↗ Λ} dim λ
    if lam:
        assert dim_hook(lam) == sum(dim_hook(mu) for mu in covered_by(lam))


def test_partition_counts():
    assert len(partitions_of(4)) == 5
    assert partitions_of(0) == [()]
    assert len(partitions_of(8)) == 22
    for n in range(13):
        assert len(partitions_of(n)) == count_partitions(n)
    assert partitions_of(4)[0] == (4,) and partitions_of(4)[-1] == (1, 1, 1, 1)
    assert len(partitions_upto(4)) == 1 + 1 + 2 + 3 + 5


def test_n_statistic():
    assert n_statistic((3, 2, 1)) == 2 + 2
    # n(λ) = Σ_cells (i - 1) and equals Σ over columns of binomials of λ'
    lam = (5, 4, 2, 2)
    assert n_statistic(lam) == sum(c * (c - 1) // 2 for c in conjugate(lam))


def test_composition_examples():
    assert conjugate_composition((1, 1, 2, 4)) == (1, 1, 1, 2, 3)
    assert restrict((1, 1, 2, 4), 3, 7) == (2, 3)
    assert restrict((1, 1, 2, 4), 1, 8) == (1, 1, 2, 4)
    assert restrict((1, 1, 2, 4), 4, 3) == ()
    with pytest.raises(ValueError):
        Composition((1, 0))


@given(st.integers(1, 8).flatmap(lambda n: st.sampled_from(compositions_of(n))))
def test_composition_properties(c):
    n = sum(c)
    assert conjugate_composition(conjugate_composition(c)) == c
    assert restrict(c, 1, n) == c
    assert comaj(c) == sum(n - d for d in descent_set(c))
    # every window has the right size
    for i, j in combinations(range(n + 1), 2):
        assert sum(restrict(c, i + 1, j)) == j - i


def test_compositions_count():
    for n in range(1, 9):
        assert len(set(compositions_of(n))) == 2 ** (n - 1)
