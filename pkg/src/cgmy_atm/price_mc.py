"""Monte Carlo ATM pricer under the stable (tilted) measure.

After two changes of measure the call price becomes

    E[ exp(-M* U+ + G* U- - eta T) (1 - exp(-U+ - U- - T gamma_tilde - sigma W))^+ ]

where ``U+`` and ``-U-`` are i.i.d. one-sided ``Y``-stable variables at
time ``T`` and ``W ~ N(0, T)``. Paths are generated in fixed-size chunks,
each with its own Philox stream keyed by ``(seed, chunk index)``, so the
estimate does not depend on how chunks are scheduled across workers.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import math
from typing import List

import numpy as np

from .exceptions import DomainError, NumericalQualityError
from .results import PriceEstimate
from .stable import one_sided_spec, sample_one_sided


@dataclass(frozen=True)
class McConfig:
    n_paths: int = 100_000
    seed: int = 20240101
    chunk_size: int = 65536

    def __post_init__(self):
        if self.n_paths < 1:
            raise DomainError(f"n_paths must be >= 1, got {self.n_paths}")
        if self.chunk_size < 1:
            raise DomainError(f"chunk_size must be >= 1, got {self.chunk_size}")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be an unsigned 64-bit integer")

    def chunks(self):
        """(index, size) for every chunk, in order."""
        full, rest = divmod(self.n_paths, self.chunk_size)
        out = [(i, self.chunk_size) for i in range(full)]
        if rest:
            out.append((full, rest))
        return out


def chunk_rng(seed, index):
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(index,))
    return np.random.Generator(np.random.Philox(ss))


def simulate_chunk(p, t, seed, index, size):
    """Draw one chunk of paths.

    Returns ``(payoff, weight)`` where ``weight = exp(-M* U+ + G* U-)``
    and ``payoff`` already includes the ``exp(-eta T)`` normalisation.
    """
    d = p.derived
    rng = chunk_rng(seed, index)
    spec = one_sided_spec(p, t)
    up = sample_one_sided(spec, rng, size)
    down = -sample_one_sided(spec, rng, size)
    w = rng.standard_normal(size)
    weight = np.exp(-d.m_star * up + d.g_star * down)
    log_move = up + down + t * d.gamma_tilde + p.sigma * math.sqrt(t) * w
    payoff = weight * math.exp(-d.eta * t) * -np.expm1(-np.maximum(log_move, 0.0))
    return payoff, weight


@dataclass
class _Moments:
    n: int = 0
    mean: float = 0.0
    m2: float = 0.0

    def merge(self, n, mean, m2):
        # Chan et al. pairwise update
        total = self.n + n
        delta = mean - self.mean
        self.m2 += m2 + delta * delta * self.n * n / total
        self.mean += delta * n / total
        self.n = total


def _chunk_stats(p, t, seed, index, size):
    payoff, weight = simulate_chunk(p, t, seed, index, size)
    if not np.all(np.isfinite(payoff)):
        bad = int(np.count_nonzero(~np.isfinite(payoff)))
        raise NumericalQualityError(
            f"{bad} non-finite path values in chunk {index} (seed={seed}, t={t}, params={p})"
        )
    mean = float(payoff.mean())
    wmean = float(weight.mean())
    return dict(
        n=size,
        mean=mean,
        m2=float(np.sum((payoff - mean) ** 2)),
        max=float(payoff.max()),
        wmean=wmean,
        wm2=float(np.sum((weight - wmean) ** 2)),
        heavy=int(np.count_nonzero(weight * math.exp(-p.derived.eta * t) > 10.0)),
    )


def _run(p, t, cfg, workers):
    if not t > 0:
        raise DomainError(f"maturity must be > 0, got {t}")
    jobs = cfg.chunks()
    if workers <= 1:
        return [_chunk_stats(p, t, cfg.seed, i, n) for i, n in jobs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_chunk_stats, p, t, cfg.seed, i, n) for i, n in jobs]
        return [f.result() for f in futures]


def _combine(stats, key_mean, key_m2):
    acc = _Moments()
    for s in stats:
        acc.merge(s["n"], s[key_mean], s[key_m2])
    var = acc.m2 / (acc.n - 1) if acc.n > 1 else 0.0
    return acc.mean, math.sqrt(var / acc.n)


def mc_price(p, t, cfg=None, workers=1):
    """Monte Carlo ATM call price with its standard error."""
    cfg = cfg or McConfig()
    stats = _run(p, t, cfg, workers)
    price, se = _combine(stats, "mean", "m2")
    return PriceEstimate(price=price, stderr=se, method="mc", t=t)


@dataclass
class McDiagnostics:
    price: float
    stderr: float
    chunk_means: List[float] = field(default_factory=list)
    max_path_value: float = 0.0
    heavy_weight_fraction: float = 0.0
    weight_mean: float = 0.0
    weight_stderr: float = 0.0
    weight_target: float = 0.0
    drift: float = 0.0

    @property
    def weight_identity_z(self):
        """(mean weight - exp(eta T)) in standard errors."""
        return (self.weight_mean - self.weight_target) / self.weight_stderr


def mc_diagnostics(p, t, cfg=None, workers=1):
    """Variance monitoring for the change-of-measure weights.

    ``heavy_weight_fraction`` counts paths whose normalised weight
    ``exp(-M* U+ + G* U- - eta T)`` exceeds 10. The raw weight mean should
    reproduce ``exp(eta T)``.
    """
    cfg = cfg or McConfig()
    stats = _run(p, t, cfg, workers)
    price, se = _combine(stats, "mean", "m2")
    wmean, wse = _combine(stats, "wmean", "wm2")
    return McDiagnostics(
        price=price,
        stderr=se,
        chunk_means=[s["mean"] for s in stats],
        max_path_value=max(s["max"] for s in stats),
        heavy_weight_fraction=sum(s["heavy"] for s in stats) / cfg.n_paths,
        weight_mean=wmean,
        weight_stderr=wse,
        weight_target=math.exp(p.derived.eta * t),
        drift=t * p.derived.gamma_tilde,
    )
