"""Tests for partition statistics and capacity pruning.

The rank 8 fixtures are the five-factor example used throughout the
test suite: lam carries fundamental weights on nodes 2,3,4,5,7 and
gamma = (1,3,4,4,3,2,1,0).
"""

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from hldecomp.multipartition import (
    check_partition,
    col_count,
    compute_K,
    compute_P,
    enumerate_multipartitions,
    partitions_of,
    row_mult,
)

RANK8_LAM = (0, 1, 1, 1, 1, 0, 1, 0)
RANK8_GAMMA = (1, 3, 4, 4, 3, 2, 1, 0)
MU_A = ((1,), (2, 1), (2, 2), (2, 2), (2, 1), (2,), (1,), ())
MU_B = ((1,), (2, 1), (2, 1, 1), (2, 1, 1), (1, 1, 1), (1, 1), (1,), ())

partitions = st.lists(st.integers(1, 6), max_size=6).map(
    lambda xs: tuple(sorted(xs, reverse=True)))


def test_check_partition():
    assert check_partition((3, 1, 1)) == (3, 1, 1)
    assert check_partition(()) == ()
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))


def test_col_count_examples():
    assert col_count((2, 1), 1) == 2
    assert col_count((2, 2), 2) == 4
    assert col_count((), 5) == 0
    assert col_count((3, 1), 0) == 0


@given(partitions, st.integers(0, 8))
def test_col_count_monotone_and_saturating(mu, s):
    assert col_count(mu, s) <= col_count(mu, s + 1)
    if mu and s >= mu[0]:
        assert col_count(mu, s) == sum(mu)


def test_row_mult_examples():
    assert row_mult((2, 1), 1) == 1
    assert row_mult((2, 1), 2) == 1
    assert row_mult((2, 2), 2) == 2
    assert row_mult((2, 2), 1) == 0
    assert row_mult((1, 1, 1), 1) == 3


@given(partitions)
def test_row_mult_identities(mu):
    top = mu[0] if mu else 0
    assert sum(r * row_mult(mu, r) for r in range(1, top + 1)) == sum(mu)
    assert sum(row_mult(mu, r) for r in range(1, top + 1)) == len(mu)


def test_partitions_of_counts():
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    for m, cnt in enumerate(expected):
        parts = partitions_of(m)
        assert len(parts) == cnt
        assert len(set(parts)) == cnt
        for mu in parts:
            check_partition(mu)
            assert sum(mu) == m
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_compute_P_examples():
    empty = ((),) * 8
    for i in range(1, 9):
        assert compute_P(empty, RANK8_LAM, 1, i) == RANK8_LAM[i - 1]
    assert compute_P(MU_A, RANK8_LAM, 2, 5) == 1
    assert compute_P(MU_A, RANK8_LAM, 1, 2) == 0
    with pytest.raises(ValueError):
        compute_P(MU_A, RANK8_LAM, 1, 9)


def test_compute_K_examples():
    assert compute_K(MU_A, RANK8_LAM) == 13
    assert compute_K(MU_B, RANK8_LAM) == 10
    assert compute_K(((),) * 8, RANK8_LAM) == 0


def test_unpruned_count_is_product_of_partition_numbers():
    gamma = (2, 3, 1)
    lam = (1, 1, 1)
    got = enumerate_multipartitions(gamma, lam, prune=False)
    assert len(got) == len(partitions_of(2)) * len(partitions_of(3)) * len(partitions_of(1))
    assert len(set(got)) == len(got)
    for mp in got:
        assert tuple(sum(mu) for mu in mp) == gamma


def test_rank8_pruned_survivors():
    got = enumerate_multipartitions(RANK8_GAMMA, RANK8_LAM)
    assert len(got) == 6
    assert MU_A in got
    assert MU_B in got
    assert sorted(compute_K(mp, RANK8_LAM) for mp in got) == [8, 10, 10, 11, 12, 13]


def test_pruned_is_subset_with_nonnegative_capacities():
    gamma = (2, 2)
    lam = (2, 1)
    pruned = set(enumerate_multipartitions(gamma, lam, prune=True))
    unpruned = set(enumerate_multipartitions(gamma, lam, prune=False))
    assert pruned <= unpruned
    for mp in unpruned:
        caps_ok = all(
            compute_P(mp, lam, s, i) >= 0
            for i in range(1, 3)
            for s in range(1, gamma[i - 1] + 1)
        )
        assert (mp in pruned) == caps_ok


def test_relaxed_mode_agrees_on_small_grid():
    # a negative capacity at a depth with no rows always comes with a
    # negative capacity at some occupied depth, so exempting the empty
    # depths must not change the survivor set
    for lam in itertools.product(range(3), repeat=2):
        for gamma in itertools.product(range(4), repeat=2):
            strict = enumerate_multipartitions(gamma, lam, prune=True)
            relaxed = enumerate_multipartitions(gamma, lam, prune=True,
                                                relaxed_empty_groups=True)
            assert strict == relaxed


def test_input_validation():
    with pytest.raises(ValueError):
        enumerate_multipartitions((1, 1), (1,))
    with pytest.raises(ValueError):
        enumerate_multipartitions((-1,), (1,))


def test_gamma_zero_is_the_empty_multipartition():
    assert enumerate_multipartitions((0, 0), (1, 1)) == [((), ())]
