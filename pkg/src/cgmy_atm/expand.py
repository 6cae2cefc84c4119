"""Short-maturity expansions of the ATM call price and implied volatility.

Two regimes, selected by an exact ``sigma == 0`` test:

* pure jump:  price ~ d1 t^(1/Y) + d2 t - eta d1 t^(1+1/Y)
* mixed:      price ~ d1 t^(1/2) + d2 t^((3-Y)/2)

Prices are per unit spot.
"""

from dataclasses import dataclass
import math
from typing import Optional

from . import specfun
from .exceptions import DomainError, UnsupportedOrderError
from .stable import ez_plus

PURE_JUMP = "pure_jump"
MIXED = "mixed"


@dataclass(frozen=True)
class ExpansionCoeffs:
    regime: str
    d1: float
    d2: float
    d3: Optional[float]
    iv1: float
    iv2: float


def coeffs(p):
    C, G, M, Y = p.C, p.G, p.M, p.Y
    g = specfun.gamma_real(-Y)
    if p.pure_jump:
        spread = (M - 1.0) ** Y - M**Y - (G + 1.0) ** Y + G**Y
        d1 = ez_plus(p)
        return ExpansionCoeffs(
            regime=PURE_JUMP,
            d1=d1,
            d2=0.5 * C * g * spread,
            d3=-p.derived.eta * d1,
            iv1=math.sqrt(2.0 * math.pi) * d1,
            iv2=math.sqrt(0.5 * math.pi) * C * g * spread,
        )
    s = p.sigma
    jump_term = C * s ** (1.0 - Y) / (Y * (Y - 1.0))
    return ExpansionCoeffs(
        regime=MIXED,
        d1=s / math.sqrt(2.0 * math.pi),
        d2=gaussian_abs_moment(1.0 - Y) * jump_term,
        d3=None,
        iv1=s,
        iv2=2.0 ** (1.0 - 0.5 * Y) * specfun.gamma_real(1.0 - 0.5 * Y) * jump_term,
    )


def gaussian_abs_moment(q):
    """E|W|^q for standard normal W and q > -1."""
    return 2.0 ** (0.5 * q) * specfun.gamma_real(0.5 * (q + 1.0)) / math.sqrt(math.pi)


def exponents(p):
    """Powers of ``t`` multiplying d1, d2 (and d3 when defined)."""
    Y = p.Y
    if p.pure_jump:
        return (1.0 / Y, 1.0, 1.0 + 1.0 / Y)
    return (0.5, 0.5 * (3.0 - Y))


def _check_t(t):
    if not (t > 0 and math.isfinite(t)):
        raise DomainError(f"maturity must be a positive finite number, got {t!r}")


def price_approx(p, t, order=2, coef=None):
    """ATM call price truncated after ``order`` terms (1, 2 or 3)."""
    _check_t(t)
    if order not in (1, 2, 3):
        raise DomainError(f"order must be 1, 2 or 3, got {order!r}")
    k = coef or coeffs(p)
    if order == 3 and k.d3 is None:
        raise UnsupportedOrderError(
            "mixed-regime third order is not available: "
            "its coefficient has no closed form here"
        )
    powers = exponents(p)
    terms = (k.d1, k.d2, k.d3)
    return sum(terms[i] * t ** powers[i] for i in range(order))


def iv_approx(p, t, order=2, coef=None):
    """ATM implied volatility truncated after ``order`` terms (1 or 2)."""
    _check_t(t)
    if order not in (1, 2):
        raise DomainError(f"implied-vol order must be 1 or 2, got {order!r}")
    k = coef or coeffs(p)
    if k.regime == PURE_JUMP:
        first, second = k.iv1 * t ** (1.0 / p.Y - 0.5), k.iv2 * math.sqrt(t)
    else:
        first, second = k.iv1, k.iv2 * t ** (1.0 - 0.5 * p.Y)
    return first if order == 1 else first + second
