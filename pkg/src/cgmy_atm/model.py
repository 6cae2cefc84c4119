"""CGMY parameters, measure-change constants and characteristic exponents.

The log-price is ``X_t = L_t + sigma W_t`` with ``L`` a CGMY process whose
drift makes ``exp(X_t)`` a martingale (zero rates, unit spot).
"""

from dataclasses import dataclass, field
import math

import numpy as np

from . import specfun
from .exceptions import DomainError, InvalidParameterError


@dataclass(frozen=True)
class DerivedQuantities:
    """Closed-form constants attached to a parameter set.

    c, gamma: martingale drift and mean of X_1 under the pricing measure.
    m_star, g_star, c_star: share-measure tempering rates and drift.
    gamma_tilde: mean of X_1 once the jump part is made symmetric stable.
    eta: exponential compensator of the stable-to-share density process.
    vartheta: auxiliary constant of the pure-jump second-order term.
    """

    c: float
    gamma: float
    m_star: float
    g_star: float
    c_star: float
    gamma_tilde: float
    eta: float
    vartheta: float


@dataclass(frozen=True)
class CgmyParams:
    """CGMY model parameters plus an optional Brownian volatility.

    Derived constants are computed once at construction and exposed as
    ``params.derived``.
    """

    C: float
    G: float
    M: float
    Y: float
    sigma: float = 0.0
    derived: DerivedQuantities = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("C", "G", "M", "Y", "sigma"):
            object.__setattr__(self, name, float(getattr(self, name)))
        problems = _violations(self.C, self.G, self.M, self.Y, self.sigma)
        if problems:
            raise InvalidParameterError(problems)
        object.__setattr__(self, "derived", derive(self))

    @property
    def pure_jump(self):
        return self.sigma == 0.0

    @property
    def gamma_neg_y(self):
        """Gamma(-Y), positive for Y in (1, 2)."""
        return specfun.gamma_real(-self.Y)

    def replace(self, **changes):
        values = dict(C=self.C, G=self.G, M=self.M, Y=self.Y, sigma=self.sigma)
        values.update(changes)
        return CgmyParams(**values)


def _violations(C, G, M, Y, sigma):
    out = []
    for name, value in (("C", C), ("G", G), ("M", M), ("Y", Y), ("sigma", sigma)):
        if not math.isfinite(value):
            out.append(f"{name} must be finite, got {value!r}")
    if out:
        return out
    if not C > 0:
        out.append(f"C must be > 0, got {C:g}")
    if not G > 0:
        out.append(f"G must be > 0, got {G:g}")
    if not M > 1:
        out.append(f"martingale condition requires M > 1, got M = {M:g}")
    if not 1 < Y < 2:
        out.append(f"Y must lie in the open interval (1, 2), got {Y:g}")
    if not sigma >= 0:
        out.append(f"sigma must be >= 0, got {sigma:g}")
    return out


def validate(C, G, M, Y, sigma=0.0):
    """Build a :class:`CgmyParams`, raising with every violated bound listed."""
    return CgmyParams(C, G, M, Y, sigma)


def derive(p):
    C, G, M, Y, s2 = p.C, p.G, p.M, p.Y, p.sigma**2
    cg = C * specfun.gamma_real(-Y)
    # grouped so that G = M - 1 cancels exactly
    jump_shift = cg * (((M - 1.0) ** Y - M**Y) + ((G + 1.0) ** Y - G**Y))
    c = -jump_shift - 0.5 * s2
    return DerivedQuantities(
        c=c,
        gamma=c - Y * cg * (M ** (Y - 1.0) - G ** (Y - 1.0)),
        m_star=M - 1.0,
        g_star=G + 1.0,
        c_star=c + s2,
        gamma_tilde=-jump_shift + 0.5 * s2,
        eta=cg * ((M - 1.0) ** Y + (G + 1.0) ** Y),
        vartheta=-cg * (M**Y + (G + 1.0) ** Y),
    )


def _cgmy_exponent(C, G, M, Y, c, sigma, u):
    scalar = np.ndim(u) == 0
    u = complex(u) if scalar else np.asarray(u, dtype=complex)
    im = u.imag
    if not np.all((im > -M) & (im < G)):
        raise DomainError(f"Im(u) must lie in ({-M:g}, {G:g})")
    cg = C * specfun.gamma_real(-Y)
    jumps = cg * (
        specfun.complex_pow(M - 1j * u, Y) + specfun.complex_pow(G + 1j * u, Y) - M**Y - G**Y
    )
    return 1j * c * u - 0.5 * sigma**2 * u * u + jumps


def char_exponent(p, u):
    """Exponent ``psi`` with ``E exp(iuX_t) = exp(t psi(u))``.

    ``u`` may be complex (scalar or array) with ``Im(u)`` in ``(-M, G)``.
    """
    return _cgmy_exponent(p.C, p.G, p.M, p.Y, p.derived.c, p.sigma, u)


def char_exponent_share(p, u):
    """Exponent of ``X`` under the share measure, Im(u) in (-(M-1), G+1)."""
    d = p.derived
    return _cgmy_exponent(p.C, d.g_star, d.m_star, p.Y, d.c_star, p.sigma, u)


def characteristic_function(p, t, u):
    return np.exp(t * char_exponent(p, u))


def bs_char_exponent(Sigma, u):
    """Black-Scholes log-price exponent per unit time, zero rates."""
    return -0.5 * Sigma**2 * (u * u + 1j * u)


def levy_density(p, x):
    """CGMY Lévy density at ``x != 0``."""
    x = float(x)
    if x == 0.0:
        raise DomainError("the Lévy density is not defined at 0")
    if x > 0:
        return p.C * math.exp(-p.M * x) * x ** (-1.0 - p.Y)
    return p.C * math.exp(p.G * x) * (-x) ** (-1.0 - p.Y)


# benchmark jump parameters used by the CLI presets
DEFAULT_JUMPS = dict(C=0.5, G=2.0, M=3.6, Y=1.5)
