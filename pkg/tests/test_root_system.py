"""Tests for the type A root and weight helpers."""

import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from hldecomp.root_system import (
    check_rank,
    dominant_gamma_bounds,
    e_gamma,
    enumerate_dominant_gammas,
    fundamental_weight,
    gamma_height,
    is_dominant,
    pairing,
    positive_roots,
    weight_minus_gamma,
    weyl_dim,
)


def test_check_rank():
    assert check_rank(1) == 1
    assert check_rank(8) == 8
    for bad in (0, -3, True, False, "2", 1.5):
        with pytest.raises(ValueError):
            check_rank(bad)


def test_positive_roots_small():
    assert positive_roots(1) == [(1, 1)]
    assert positive_roots(2) == [(1, 1), (1, 2), (2, 2)]
    for n in range(1, 8):
        roots = positive_roots(n)
        assert len(roots) == n * (n + 1) // 2
        assert all(1 <= i <= j <= n for i, j in roots)


def test_pairing_on_fundamental_weights():
    for n in range(1, 6):
        for i in range(1, n + 1):
            w = fundamental_weight(n, i)
            for a, b in positive_roots(n):
                assert pairing(w, (a, b)) == (1 if a <= i <= b else 0)


def test_pairing_rejects_bad_roots():
    with pytest.raises(ValueError):
        pairing((1, 1), (1, 3))
    with pytest.raises(ValueError):
        pairing((1, 1), (0, 1))


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6), st.data())
def test_pairing_is_additive_over_the_interval(lam, data):
    n = len(lam)
    i = data.draw(st.integers(1, n))
    j = data.draw(st.integers(i, n))
    assert pairing(lam, (i, j)) == sum(pairing(lam, (t, t)) for t in range(i, j + 1))


def test_weyl_dim_of_fundamentals_is_binomial():
    for n in range(1, 9):
        for i in range(1, n + 1):
            assert weyl_dim(n, fundamental_weight(n, i)) == comb(n + 1, i)


def test_weyl_dim_known_values():
    assert weyl_dim(1, (0,)) == 1
    assert weyl_dim(1, (1,)) == 2
    assert weyl_dim(1, (2,)) == 3
    assert weyl_dim(2, (1, 1)) == 8
    assert weyl_dim(3, (1, 0, 1)) == 15
    assert weyl_dim(3, (1, 1, 1)) == 64


def test_weyl_dim_rejects_non_dominant():
    with pytest.raises(ValueError):
        weyl_dim(2, (1, -1))
    with pytest.raises(ValueError):
        weyl_dim(2, (1,))


def test_weight_minus_simple_roots():
    # subtracting alpha_i shifts by a Cartan matrix row
    lam = (3, 3, 3)
    assert weight_minus_gamma(lam, (0, 0, 0)) == lam
    assert weight_minus_gamma(lam, (1, 0, 0)) == (1, 4, 3)
    assert weight_minus_gamma(lam, (0, 1, 0)) == (4, 1, 4)
    assert weight_minus_gamma(lam, (0, 0, 1)) == (3, 4, 1)
    with pytest.raises(ValueError):
        weight_minus_gamma(lam, (1, 0))


@given(st.integers(1, 5), st.data())
def test_weight_minus_gamma_is_additive(n, data):
    lam = tuple(data.draw(st.integers(0, 4)) for _ in range(n))
    g1 = tuple(data.draw(st.integers(0, 3)) for _ in range(n))
    g2 = tuple(data.draw(st.integers(0, 3)) for _ in range(n))
    both = tuple(a + b for a, b in zip(g1, g2))
    stepwise = weight_minus_gamma(weight_minus_gamma(lam, g1), g2)
    assert weight_minus_gamma(lam, both) == stepwise


def test_heights():
    assert gamma_height((1, 3, 4)) == 8
    assert e_gamma((1, 3, 4)) == 3 + 12
    assert e_gamma((2,)) == 0


def _dominant_gammas_by_box(lam, slack=0):
    n = len(lam)
    box = [b + slack for b in dominant_gamma_bounds(lam)]
    out = []
    for gamma in itertools.product(*[range(b + 1) for b in box]):
        if is_dominant(weight_minus_gamma(lam, gamma)):
            out.append(gamma)
    return sorted(out, key=lambda g: (sum(g), g))


def test_enumerate_dominant_gammas_matches_box_search():
    for lam in [(2,), (1, 1), (2, 2), (1, 0, 1), (2, 1, 2), (1, 1, 1, 1)]:
        assert enumerate_dominant_gammas(lam) == _dominant_gammas_by_box(lam)


def test_dominant_gamma_bounds_dominate():
    # widen the box; nothing dominant may appear outside the bounds
    for lam in [(2,), (2, 2), (1, 1, 1), (0, 2, 0)]:
        bounds = dominant_gamma_bounds(lam)
        for gamma in _dominant_gammas_by_box(lam, slack=2):
            assert all(g <= b for g, b in zip(gamma, bounds))


def test_enumerate_dominant_gammas_corners():
    assert enumerate_dominant_gammas((0, 0)) == [(0, 0)]
    gs = enumerate_dominant_gammas((1, 1))
    assert gs[0] == (0, 0)
    assert (1, 1) in gs
    heights = [sum(g) for g in gs]
    assert heights == sorted(heights)
    with pytest.raises(ValueError):
        enumerate_dominant_gammas((1, -1))


def test_enumerate_dominant_gammas_all_results_dominant():
    for lam in [(3, 0, 2), (0, 1, 1, 1)]:
        for gamma in enumerate_dominant_gammas(lam):
            assert is_dominant(weight_minus_gamma(lam, gamma))
