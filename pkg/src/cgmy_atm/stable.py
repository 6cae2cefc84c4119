"""Stable laws attached to the CGMY model after the change of measure.

Under the stable measure the positive and negative compensated jump parts
are i.i.d. totally skewed ``Y``-stable variables and their difference is a
symmetric ``Y``-stable variable. The convention throughout is

    E exp(iuX) = exp(-scale_c |u|^alpha (1 - i beta tan(pi alpha / 2) sign u)),

so ``scale_c`` multiplies ``|u|^alpha`` directly and, for ``alpha > 1``,
``E X = 0``.
"""

from dataclasses import dataclass
import math

import numpy as np

from . import specfun
from .exceptions import DomainError


@dataclass(frozen=True)
class StableSpec:
    alpha: float
    beta: float
    scale_c: float
    location: float = 0.0

    def __post_init__(self):
        if not 1.0 < self.alpha < 2.0:
            raise DomainError(f"alpha must lie in (1, 2), got {self.alpha}")
        if self.beta not in (-1.0, 0.0, 1.0):
            raise DomainError(f"beta must be -1, 0 or 1, got {self.beta}")
        if not self.scale_c > 0.0:
            raise DomainError(f"scale_c must be > 0, got {self.scale_c}")

    def char_function(self, u):
        """Closed-form characteristic function, used to check samplers."""
        u = np.asarray(u, dtype=float)
        skew = 1.0 - 1j * self.beta * math.tan(0.5 * math.pi * self.alpha) * np.sign(u)
        return np.exp(-self.scale_c * np.abs(u) ** self.alpha * skew + 1j * self.location * u)


def _stable_constant(p):
    # C Gamma(-Y) |cos(pi Y / 2)|
    return p.C * specfun.gamma_real(-p.Y) * abs(math.cos(0.5 * math.pi * p.Y))


def one_sided_spec(p, t=1.0):
    """Law of the compensated positive jump part at time ``t``."""
    return StableSpec(p.Y, 1.0, t * _stable_constant(p))


def symmetric_spec(p, t=1.0):
    """Law of the symmetric stable part ``Z_t``."""
    return StableSpec(p.Y, 0.0, 2.0 * t * _stable_constant(p))


def ez_plus(p):
    """E(Z_1^+) for the symmetric stable part of ``p`` (sigma ignored)."""
    Y = p.Y
    return specfun.gamma_real(1.0 - 1.0 / Y) * (2.0 * _stable_constant(p)) ** (1.0 / Y) / math.pi


def sample_stable(spec, rng, size=None):
    """Chambers-Mallows-Stuck draws from ``spec``.

    ``rng`` is a :class:`numpy.random.Generator`. Each draw consumes one
    uniform angle followed by one standard exponential.
    """
    a, b = spec.alpha, spec.beta
    v = rng.uniform(-0.5 * math.pi, 0.5 * math.pi, size)
    w = rng.standard_exponential(size)
    tan_a = math.tan(0.5 * math.pi * a)
    shift = math.atan(b * tan_a) / a
    amp = (1.0 + (b * tan_a) ** 2) ** (0.5 / a)
    av = a * (v + shift)
    x = (
        amp
        * np.sin(av)
        / np.cos(v) ** (1.0 / a)
        * (np.cos(v - av) / w) ** ((1.0 - a) / a)
    )
    x = spec.scale_c ** (1.0 / a) * x + spec.location
    return float(x) if size is None else x


def sample_one_sided(spec, rng, size=None):
    if spec.beta != 1.0:
        raise DomainError("sample_one_sided needs beta = 1")
    return sample_stable(spec, rng, size)


def sample_symmetric_z(p, rng, size=None, t=1.0):
    """Draws of ``Z_t`` built as the difference of two one-sided draws."""
    spec = one_sided_spec(p, t)
    up = sample_one_sided(spec, rng, size)
    down = sample_one_sided(spec, rng, size)
    return up - down


def tail_reference(p, v):
    """Asymptotic survival ``(C / Y) v^-Y`` of the one-sided law at ``v``."""
    if not v > 0:
        raise DomainError(f"tail_reference needs v > 0, got {v}")
    return p.C / p.Y * v ** (-p.Y)
