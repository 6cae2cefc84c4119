"""Cross-module identity checks run by ``cgmy-atm selftest``."""

from dataclasses import dataclass
import math

import numpy as np
from scipy import integrate

from . import stable
from .bsm import AtmQuote, bs_atm_price, implied_vol_atm
from .expand import coeffs
from .model import CgmyParams, DEFAULT_JUMPS, char_exponent, char_exponent_share
from .price_ift import IftConfig, ift_price


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


def random_params(rng, n, sigma=None):
    """``n`` random valid parameter sets around the benchmark scale.

    ``sigma=None`` mixes both regimes.
    """
    out = []
    for _ in range(n):
        s = sigma if sigma is not None else float(rng.choice([0.0, rng.uniform(0.05, 0.8)]))
        out.append(
            CgmyParams(
                C=rng.uniform(0.1, 1.0),
                G=rng.uniform(0.5, 6.0),
                M=rng.uniform(1.5, 6.0),
                Y=rng.uniform(1.1, 1.9),
                sigma=s,
            )
        )
    return out


def tempered_integral(C, Y, lam):
    """C * int_0^inf (exp(-lam x) - 1 + lam x) x^(-Y-1) dx by quadrature.

    Equals ``C Gamma(-Y) lam^Y`` by analytic continuation; computed here
    without any Gamma evaluation.
    """

    def smooth(x):
        z = lam * x
        if z < 1e-3:
            return lam * lam * (0.5 - z / 6.0 + z * z / 24.0 - z**3 / 120.0)
        return (math.expm1(-z) + z) / (x * x)

    # x^(1-Y) algebraic weight on [0, 1]
    near, _ = integrate.quad(smooth, 0.0, 1.0, weight="alg", wvar=(1.0 - Y, 0.0), epsabs=0, epsrel=1e-12)
    far, _ = integrate.quad(lambda x: smooth(x) * x ** (1.0 - Y), 1.0, np.inf, epsabs=0, epsrel=1e-12)
    return C * (near + far)


def second_order_by_quadrature(p):
    """vartheta + eta + gamma_tilde / 2 (pure jump) from Lévy-measure integrals."""
    C, G, M, Y = p.C, p.G, p.M, p.Y
    i_m, i_g = tempered_integral(C, Y, M), tempered_integral(C, Y, G)
    i_ms, i_gs = tempered_integral(C, Y, M - 1.0), tempered_integral(C, Y, G + 1.0)
    vartheta = -(i_m + i_gs)
    eta = i_ms + i_gs
    gamma_tilde = -(i_ms + i_gs - i_m - i_g)
    return vartheta + eta + 0.5 * gamma_tilde


def check_martingale(rng):
    worst = 0.0
    for p in random_params(rng, 200):
        for t in (0.01, 0.1, 1.0):
            worst = max(worst, abs(np.exp(t * char_exponent(p, -1j)) - 1.0))
    return Check("martingale", bool(worst <= 1e-10), f"max |phi_t(-i) - 1| = {worst:.2e}")


def check_share_measure(rng):
    # scaled by max(1, |psi|): for |psi| in the thousands an absolute 1e-12
    # is finer than the spacing of doubles
    worst = 0.0
    for p in random_params(rng, 50):
        u = rng.uniform(-50.0, 50.0, 50)
        ref = char_exponent(p, u - 1j)
        err = np.abs(char_exponent_share(p, u) - ref) / np.maximum(1.0, np.abs(ref))
        worst = max(worst, float(np.max(err)))
    return Check("share-measure", worst <= 1e-12, f"max scaled |psi*(u) - psi(u-i)| = {worst:.2e}")


def check_second_order(rng):
    worst = 0.0
    for p in random_params(rng, 5, sigma=0.0) + [CgmyParams(**DEFAULT_JUMPS)]:
        d2 = coeffs(p).d2
        worst = max(worst, abs(second_order_by_quadrature(p) / d2 - 1.0))
    return Check("second-order identity", worst <= 1e-8, f"max rel. error = {worst:.2e}")


def check_exponential_identity(rng, n=10**6, t=0.01, n_se=4.0):
    p = CgmyParams(**DEFAULT_JUMPS)
    d = p.derived
    spec = stable.one_sided_spec(p)
    up = stable.sample_one_sided(spec, rng, n)
    down = stable.sample_one_sided(spec, rng, n)
    vals = np.exp(-t ** (1.0 / p.Y) * (d.m_star * up + d.g_star * down))
    mean, se = vals.mean(), vals.std(ddof=1) / math.sqrt(n)
    target = math.exp(d.eta * t)
    z = (mean - target) / se
    return Check("exp(eta t) sampler identity", bool(abs(z) <= n_se), f"mean {mean:.5f} vs {target:.5f} ({z:+.2f} SE)")


def check_sigma_ref_invariance(rng):
    spread = 0.0
    for s in (0.0, 0.4):
        p = CgmyParams(sigma=s, **DEFAULT_JUMPS)
        prices = [ift_price(p, 0.25, IftConfig(sigma_ref=r)).price for r in (0.15, 0.25, 0.35)]
        spread = max(spread, max(prices) - min(prices))
    return Check("Sigma_ref invariance", spread <= 1e-5, f"max spread = {spread:.2e}")


def check_bs_round_trip(rng):
    worst = 0.0
    for sigma in (0.05, 0.2, 0.5, 1.5):
        for t in (1e-4, 0.01, 0.25, 2.0):
            price = bs_atm_price(sigma, t)
            back = bs_atm_price(implied_vol_atm(AtmQuote(t, price)), t)
            worst = max(worst, abs(back - price))
    return Check("BS round trip", worst <= 1e-10, f"max price error = {worst:.2e}")


CHECKS = (
    check_martingale,
    check_share_measure,
    check_second_order,
    check_exponential_identity,
    check_sigma_ref_invariance,
    check_bs_round_trip,
)


def run_all(seed=7):
    rng = np.random.default_rng(seed)
    results = []
    for check in CHECKS:
        try:
            results.append(check(rng))
        except Exception as exc:  # reported, not raised
            results.append(Check(check.__name__, False, f"{type(exc).__name__}: {exc}"))
    return results
