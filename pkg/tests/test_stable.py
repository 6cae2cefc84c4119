import math

import numpy as np
import pytest
from scipy import integrate, stats

from cgmy_atm import CgmyParams, ez_plus, tail_reference
from cgmy_atm.exceptions import DomainError
from cgmy_atm.stable import (
    StableSpec,
    one_sided_spec,
    sample_one_sided,
    sample_stable,
    sample_symmetric_z,
    symmetric_spec,
)


def stable_positive_mean(scale_c, alpha):
    """E(Z^+) of a symmetric stable law from its characteristic function.

    E|Z| = (2 / pi) int_0^inf (1 - Re phi(u)) / u^2 du, and E Z^+ = E|Z| / 2.
    """
    f = lambda u: -math.expm1(-scale_c * u**alpha) / u**2
    val = sum(integrate.quad(f, a, b, limit=200)[0] for a, b in ((0, 1), (1, np.inf)))
    return val / math.pi


def test_ez_plus_against_cf_integral(pure):
    spec = symmetric_spec(pure)
    assert ez_plus(pure) == pytest.approx(stable_positive_mean(spec.scale_c, spec.alpha), rel=1e-9)
    assert ez_plus(pure) == pytest.approx(1.2008220666706398, rel=1e-13)


def test_ez_plus_monte_carlo(pure):
    z = sample_symmetric_z(pure, np.random.default_rng(3), 2_000_000)
    # infinite variance: the sample mean error shrinks like n^(1/Y - 1) only
    assert np.maximum(z, 0).mean() == pytest.approx(ez_plus(pure), rel=0.03)


def test_ez_plus_scaling(pure):
    scaled = pure.replace(C=pure.C * 2**pure.Y)
    assert ez_plus(scaled) == pytest.approx(2 * ez_plus(pure), rel=1e-14)


def test_ez_plus_vanishes_with_c(pure):
    vals = [ez_plus(pure.replace(C=c)) for c in (1.0, 0.1, 1e-3, 1e-6, 1e-9)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 1e-5


def test_spec_constants(pure):
    one = one_sided_spec(pure)
    sym = symmetric_spec(pure)
    g = 4 * math.sqrt(math.pi) / 3  # Gamma(-1.5)
    assert one.scale_c == pytest.approx(0.5 * g * abs(math.cos(0.75 * math.pi)), rel=1e-14)
    assert sym.scale_c == pytest.approx(2 * one.scale_c, rel=1e-15)
    assert (one.alpha, one.beta, sym.beta) == (1.5, 1.0, 0.0)


@pytest.mark.parametrize("kwargs", [dict(alpha=2.0, beta=1, scale_c=1), dict(alpha=1.5, beta=0.5, scale_c=1),
                                    dict(alpha=1.5, beta=1, scale_c=0)])
def test_spec_rejects(kwargs):
    with pytest.raises(DomainError):
        StableSpec(**kwargs)


@pytest.mark.parametrize("beta", [1.0, 0.0, -1.0])
def test_sampler_characteristic_function(beta):
    spec = StableSpec(1.5, beta, 0.8)
    n = 1_000_000
    x = sample_stable(spec, np.random.default_rng(11), n)
    for u in (0.25, 0.5, 1.0):
        emp = np.mean(np.exp(1j * u * x))
        want = spec.char_function(u)
        assert abs(emp.real - want.real) <= 4 / math.sqrt(n)
        assert abs(emp.imag - want.imag) <= 4 / math.sqrt(n)


def test_one_sided_mean_zero(pure):
    # mean of n draws is n^(1/alpha - 1) times one draw (strict stability)
    spec = one_sided_spec(pure)
    n = 1_000_000
    m = sample_one_sided(spec, np.random.default_rng(5), n).mean()
    scale = spec.scale_c ** (1 / spec.alpha) * n ** (1 / spec.alpha - 1)
    lo, hi = stats.levy_stable.ppf([0.001, 0.999], spec.alpha, 1.0, scale=scale)
    assert lo < m < hi


def test_one_sided_tail(pure):
    x = sample_one_sided(one_sided_spec(pure), np.random.default_rng(9), 2_000_000)
    for v in (10.0, 20.0):
        ratio = np.mean(x > v) / tail_reference(pure, v)
        assert 0.9 <= ratio <= 1.1


def test_exponential_identity(pure):
    d = pure.derived
    t, n = 0.01, 1_000_000
    rng = np.random.default_rng(21)
    spec = one_sided_spec(pure)
    up, down = sample_one_sided(spec, rng, n), sample_one_sided(spec, rng, n)
    vals = np.exp(-t ** (1 / pure.Y) * (d.m_star * up + d.g_star * down))
    se = vals.std(ddof=1) / math.sqrt(n)
    assert math.exp(d.eta * t) == pytest.approx(1.1173258529688853, rel=1e-13)
    assert abs(vals.mean() - math.exp(d.eta * t)) <= 3 * se


def test_symmetric_z_is_symmetric(pure):
    n = 1_000_000
    z = sample_symmetric_z(pure, np.random.default_rng(2), n)
    assert abs(np.median(z)) < 0.01
    for v in (1.0, 5.0):
        up, down = np.mean(z > v), np.mean(z < -v)
        assert abs(up - down) < 4 * math.sqrt(2 * up / n)


def test_symmetric_z_tail(pure):
    z = sample_symmetric_z(pure, np.random.default_rng(4), 2_000_000)
    ratio = np.mean(z > 20.0) / tail_reference(pure, 20.0)
    assert 0.85 <= ratio <= 1.15


def test_self_similarity(pure):
    t = 0.01
    a = sample_symmetric_z(pure, np.random.default_rng(6), 100_000)
    b = sample_symmetric_z(pure, np.random.default_rng(7), 100_000, t=t) * t ** (-1 / pure.Y)
    assert stats.ks_2samp(a, b).pvalue > 0.01


def test_scalar_draw(pure):
    x = sample_one_sided(one_sided_spec(pure), np.random.default_rng(0))
    assert isinstance(x, float)


def test_determinism(pure):
    spec = one_sided_spec(pure)
    a = sample_one_sided(spec, np.random.default_rng(99), 1000)
    b = sample_one_sided(spec, np.random.default_rng(99), 1000)
    assert np.array_equal(a, b)


def test_tail_reference(pure):
    assert tail_reference(pure, 10.0) == pytest.approx(0.5 / 1.5 * 10**-1.5, rel=1e-15)
    assert tail_reference(pure, 20.0) / tail_reference(pure, 10.0) == pytest.approx(2**-1.5)
    assert tail_reference(pure.replace(C=1.0), 10.0) == pytest.approx(2 * tail_reference(pure, 10.0))
    with pytest.raises(DomainError):
        tail_reference(pure, 0.0)


def test_symmetric_z_density_tail(pure):
    n = 10_000_000
    z = sample_symmetric_z(pure, np.random.default_rng(8), n)
    edges = np.geomspace(10.0, 50.0, 6)
    counts, _ = np.histogram(z, edges)
    mids = np.sqrt(edges[1:] * edges[:-1])
    scaled = counts / (n * np.diff(edges)) * mids ** (pure.Y + 1)
    assert np.all(np.abs(scaled / pure.C - 1) <= 0.15)
