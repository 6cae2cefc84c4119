"""At-the-money Black-Scholes price, its small-time expansion and inverse.

Zero rates, unit spot. With ``theta = sigma sqrt(t)`` the ATM call is
``F(theta) = 2 Phi(theta / 2) - 1``.
"""

from dataclasses import dataclass
import math

from . import specfun
from .exceptions import DomainError

_SQRT_2PI = math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class AtmQuote:
    t: float
    price: float

    def __post_init__(self):
        if not self.t > 0:
            raise DomainError(f"maturity must be > 0, got {self.t}")
        if not 0.0 < self.price < 1.0:
            raise DomainError(f"ATM price per unit spot must be in (0, 1), got {self.price}")


def atm_f(theta):
    # 2 Phi(theta/2) - 1 written through erf to keep precision at tiny theta
    return math.erf(theta / (2.0 * math.sqrt(2.0)))


def bs_atm_price(sigma, t):
    if not t > 0:
        raise DomainError(f"maturity must be > 0, got {t}")
    if sigma == 0:
        return 0.0
    return atm_f(sigma * math.sqrt(t))


def bs_atm_vega(sigma, t):
    rt = math.sqrt(t)
    return specfun.std_normal_pdf(0.5 * sigma * rt) * rt


def bs_atm_expansion(sigma, t):
    """Two-term small-time expansion; the remainder is O(t^(5/2))."""
    if not t > 0:
        raise DomainError(f"maturity must be > 0, got {t}")
    return sigma * math.sqrt(t) / _SQRT_2PI - sigma**3 * t**1.5 / (24.0 * _SQRT_2PI)


def implied_vol_atm(q, tol=1e-14, max_iter=200):
    """Black-Scholes volatility reproducing an ATM quote.

    Safeguarded Newton iteration on a bracket ``[lo, hi]``: a Newton step
    that leaves the bracket is replaced by bisection. Convergence is judged
    on the price residual since vega vanishes as ``t -> 0``.
    """
    if not isinstance(q, AtmQuote):
        q = AtmQuote(*q)
    t, target = q.t, q.price
    lo, hi = 0.0, 1.0
    while bs_atm_price(hi, t) < target:
        lo, hi = hi, 2.0 * hi
        if hi > 1e12:
            raise DomainError("could not bracket the implied volatility")
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        resid = bs_atm_price(x, t) - target
        if abs(resid) <= tol or hi - lo <= 1e-16 * hi:
            return x
        if resid > 0:
            hi = x
        else:
            lo = x
        vega = bs_atm_vega(x, t)
        step = x - resid / vega if vega > 0 else math.nan
        x = step if lo < step < hi else 0.5 * (lo + hi)
    return x
