from fractions import Fraction as Fr

import pytest
from hypothesis import given, strategies as st

from finegrain import framework as F


def test_obs1():
    assert F.obs1_envelope(1, 1, 1) == (2, 2, 1)
    assert F.obs1_envelope(2, 1, 2) == (3, 3, 1)
    lam = Fr(3, 7)
    assert F.obs1_envelope(1, 1, lam) == (1 + 1 / lam, 1 + lam, lam)


def test_thm24():
    for g in (Fr(5, 4), Fr(3, 2), Fr(7, 4)):
        assert F.thm24_beta_max(2, g) == g / (g - 1)
        assert F.thm24_beta_max(3, g) == 2 * g / (g - 1)
    assert F.thm24_beta_max(2, Fr(3, 2)) == 3
    assert F.thm24_beta_max(2, 1 + Fr(1, 10**6)) > 10**5
    with pytest.raises(ValueError):
        F.thm24_beta_max(2, 2)
    with pytest.raises(ValueError):
        F.thm24_beta_max(2, 1)


def test_cor25():
    g = Fr(3, 2)
    assert F.cor25_kernel_beta_max(2, g, xi=2) == g / (2 * (g - 1))
    assert F.cor25_kernel_beta_max(3, g, xi=3) == 2 * g / (3 * (g - 1))
    assert F.cor25_kernel_beta_max(2, g, xi=1) == F.thm24_beta_max(2, g)


def test_thm24_lambda():
    assert F.thm24_lambda(3, Fr(3, 2)) == 1
    assert F.thm24_lambda(4, 2) == 1
    with pytest.raises(ValueError):
        F.thm24_lambda(2, 2)


def test_floats_rejected():
    with pytest.raises(TypeError):
        F.thm24_beta_max(2.0, 1.5)


@given(st.fractions(min_value=Fr(1, 100), max_value=10), st.fractions(min_value=Fr(101, 100), max_value=Fr(19, 10)))
def test_lambda_sign_matches_beta(beta, gamma):
    if beta > gamma:
        assert F.thm24_lambda(beta, gamma) > 0
    else:
        with pytest.raises(ValueError):
            F.thm24_lambda(beta, gamma)


@given(st.integers(0, 10**30), st.integers(1, 7))
def test_iroot(x, r):
    m = F.iroot(x, r)
    assert m**r <= x < (m + 1) ** r


@given(st.integers(1, 5000), st.fractions(min_value=0, max_value=3, max_denominator=12))
def test_ceil_pow(n, e):
    c = F.ceil_pow(n, e)
    p, r = e.numerator, e.denominator
    assert c**r >= n**p and (c - 1) ** r < n**p


def test_excluded_region():
    reg = F.excluded_region(2, Fr(3, 2), xi=2)
    assert reg["beta_max"] == 3 and reg["kernel_beta_max"] == Fr(3, 2) and reg["lambda_max"] == 1
