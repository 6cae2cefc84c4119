import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from cgmy_atm.exceptions import DomainError
from cgmy_atm.specfun import complex_pow, gamma_real, std_normal_cdf


def test_gamma_half():
    assert gamma_real(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_negative_three_halves():
    assert gamma_real(-1.5) == pytest.approx(4.0 * math.sqrt(math.pi) / 3.0, rel=1e-14)


def test_gamma_third():
    # mpmath value; reflection pair Gamma(1/3) Gamma(2/3) = 2 pi / sqrt 3
    assert gamma_real(1.0 / 3.0) == pytest.approx(2.678938534707747633655693, rel=1e-14)
    assert gamma_real(1 / 3) * gamma_real(2 / 3) == pytest.approx(2 * math.pi / math.sqrt(3), rel=1e-14)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -7.0])
def test_gamma_poles(x):
    with pytest.raises(DomainError):
        gamma_real(x)


def test_gamma_accuracy_against_mpmath():
    xs = np.concatenate([np.linspace(-1.99, -1.01, 400), np.linspace(1e-3, 10.0, 600)])
    worst = max(abs(gamma_real(x) / float(mpmath.gamma(x)) - 1.0) for x in xs)
    assert worst <= 1e-13


def test_gamma_recurrence(rng):
    xs = rng.uniform(-4.0, 8.0, 10_000)
    xs = xs[np.abs(xs - np.round(xs)) > 1e-3]
    rel = [abs(gamma_real(x + 1.0) / (x * gamma_real(x)) - 1.0) for x in xs]
    assert max(rel) <= 1e-12


def test_gamma_positive_on_stable_range():
    assert all(gamma_real(-y) > 0 for y in np.linspace(1.001, 1.999, 500))


def test_complex_pow_identity_base():
    assert complex_pow(1 + 0j, 1.5) == 1 + 0j


def test_complex_pow_real_axis():
    assert complex_pow(2.5, 1.7) == pytest.approx(2.5**1.7, rel=1e-15)


@pytest.mark.parametrize("z", [1j, -1 + 0.5j, 0.0])
def test_complex_pow_rejects_left_half_plane(z):
    with pytest.raises(DomainError):
        complex_pow(z, 1.5)


def test_complex_pow_vectorised_matches_cmath():
    z = np.array([3 - 2j, 0.1 + 40j, 5 + 0j])
    got = complex_pow(z, 1.3)
    want = [cmath.exp(1.3 * cmath.log(w)) for w in z]
    assert np.allclose(got, want, rtol=1e-14, atol=0)


@given(
    re=st.floats(1e-3, 1e3),
    im=st.floats(-1e3, 1e3),
    y=st.floats(-2.0, 2.0),
)
def test_complex_pow_inverse(re, im, y):
    z = complex(re, im)
    assert abs(complex_pow(z, y) * complex_pow(z, -y) - 1.0) <= 1e-12


def test_normal_cdf_values():
    assert std_normal_cdf(0.0) == 0.5
    # erf Taylor series evaluated at 40 digits
    assert std_normal_cdf(0.1) == pytest.approx(0.5398278372770289814654046, abs=1e-15)


@given(st.floats(-30, 30))
def test_normal_cdf_symmetry(x):
    assert std_normal_cdf(x) + std_normal_cdf(-x) == pytest.approx(1.0, abs=1e-15)
