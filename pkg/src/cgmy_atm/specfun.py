"""Special functions: real Gamma, principal complex powers, normal CDF."""

import cmath
import math

import numpy as np

from .exceptions import DomainError

# Lanczos approximation, g = 7, nine coefficients.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def _lanczos(x):
    # valid for x >= 0.5
    x -= 1.0
    acc = _LANCZOS_COEF[0]
    for k in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[k] / (x + k)
    t = x + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (x + 0.5) * math.exp(-t) * acc


def gamma_real(x):
    """Gamma function for real ``x`` away from the poles 0, -1, -2, ...

    Arguments below 1/2 are mapped through the reflection formula
    ``Gamma(x) = pi / (sin(pi x) Gamma(1 - x))``.
    """
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"gamma_real needs a finite argument, got {x!r}")
    if x <= 0.0 and x == math.floor(x):
        raise DomainError(f"gamma_real has a pole at {x:g}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * _lanczos(1.0 - x))
    return _lanczos(x)


def complex_pow(z, y):
    """Principal branch ``z**y`` restricted to the open right half-plane.

    Accepts scalars or numpy arrays for ``z``. The branch is
    ``exp(y (ln|z| + i arg z))`` with ``arg z`` in ``(-pi/2, pi/2)``;
    points with ``Re z <= 0`` are rejected instead of guessing a branch.
    """
    if np.ndim(z) == 0:
        z = complex(z)
        if not z.real > 0.0:
            raise DomainError(f"complex_pow needs Re(z) > 0, got {z!r}")
        return cmath.exp(y * complex(math.log(abs(z)), math.atan2(z.imag, z.real)))
    z = np.asarray(z, dtype=complex)
    if not np.all(z.real > 0.0):
        raise DomainError("complex_pow needs Re(z) > 0 for every element")
    return np.exp(y * (np.log(np.abs(z)) + 1j * np.arctan2(z.imag, z.real)))


def std_normal_cdf(x):
    """Standard normal distribution function."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


def std_normal_pdf(x):
    return math.exp(-0.5 * x * x) / _SQRT_2PI
