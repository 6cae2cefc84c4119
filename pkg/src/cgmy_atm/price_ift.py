"""Fourier-inversion ATM pricer.

The CGMY price is written as a Black-Scholes reference price plus the
inverse transform of the damped difference of characteristic functions,

    C = C_BS(Sigma) + (1 / 2 pi) int zeta(v) dv,
    zeta(v) = (phi_T(v - i) - phi_T^BS(v - i)) / (i v (1 + i v)),

integrated with Simpson weights on ``P`` points spanning ``[-Q/2, Q/2]``.
"""

from dataclasses import dataclass
import math
import warnings

import numpy as np

from .bsm import bs_atm_price
from .exceptions import DomainError, NumericalQualityError
from .model import bs_char_exponent, char_exponent
from .results import PriceEstimate

IMAG_TOLERANCE = 1e-8
SMALL_T_WARNING = 0.05


class SmallMaturityWarning(UserWarning):
    """The Fourier integrand is nearly flat; prefer Monte Carlo."""


@dataclass(frozen=True)
class IftConfig:
    P: int = 2**14
    Q: float = 800.0
    sigma_ref: float = 0.25

    def __post_init__(self):
        if self.P < 4 or self.P % 2:
            raise DomainError(f"P must be an even integer >= 4, got {self.P}")
        if not self.Q > 0:
            raise DomainError(f"Q must be > 0, got {self.Q}")
        if not self.sigma_ref > 0:
            raise DomainError(f"sigma_ref must be > 0, got {self.sigma_ref}")

    @property
    def step(self):
        return self.Q / (self.P - 1)

    def nodes(self):
        return -0.5 * self.Q + self.step * np.arange(self.P)


def simpson_weights(P):
    """Alternating 4/3, 2/3 weights with halved end points.

    Sums to ``P - 1``, so a constant integrand is integrated exactly.
    """
    w = np.where(np.arange(P) % 2 == 1, 4.0 / 3.0, 2.0 / 3.0)
    w[0] *= 0.5
    w[-1] *= 0.5
    return w


def zeta(p, T, Sigma, v):
    """Damped characteristic-function difference at real frequency ``v != 0``."""
    v = np.asarray(v, dtype=float)
    if np.any(v == 0.0):
        raise DomainError("zeta has a removable singularity at v = 0; use an offset grid")
    u = v - 1j
    num = np.exp(T * char_exponent(p, u)) - np.exp(T * bs_char_exponent(Sigma, u))
    out = num / (1j * v * (1.0 + 1j * v))
    return complex(out) if out.ndim == 0 else out


def ift_price(p, T, cfg=None):
    cfg = cfg or IftConfig()
    if not T > 0:
        raise DomainError(f"maturity must be > 0, got {T}")
    if T < SMALL_T_WARNING:
        warnings.warn(
            f"T = {T:g} < {SMALL_T_WARNING}: Fourier integrand is nearly flat, "
            "Monte Carlo is more reliable",
            SmallMaturityWarning,
            stacklevel=2,
        )
    terms = simpson_weights(cfg.P) * zeta(p, T, cfg.sigma_ref, cfg.nodes())
    scale = cfg.step / (2.0 * math.pi)
    # fsum is exactly rounded, hence independent of summation order
    re = scale * math.fsum(terms.real)
    im = scale * math.fsum(terms.imag)
    if not math.isfinite(re) or abs(im) > IMAG_TOLERANCE:
        raise NumericalQualityError(
            f"quadrature imaginary residual {im:.3e} exceeds {IMAG_TOLERANCE:g} "
            f"(T={T}, P={cfg.P}, Q={cfg.Q})"
        )
    return PriceEstimate(price=bs_atm_price(cfg.sigma_ref, T) + re, method="ift", t=T)
