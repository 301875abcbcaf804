"""Sampling from the random chain model and Monte Carlo estimates.

Trial ``i`` draws from its own Philox stream keyed by the seed with counter
``i``, so results do not depend on evaluation order or worker count.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

import mpmath
import numpy as np
from mpmath import mp, mpf

from .cactus_graph import AttachmentSequence, AttachmentType
from .exact_count import IndexKind, count_chain
from .expectation import ProbabilityTriple

UNIFORM_BITS = 53
_SCALE = 1 << UNIFORM_BITS
_MASK64 = (1 << 64) - 1


def parse_seed(text: str) -> int:
    """Decimal or ``0x`` hexadecimal seed, reduced to 64 bits."""
    value = int(text.strip(), 0)
    if value < 0:
        raise ValueError("seed must be non-negative")
    if value > _MASK64:
        raise ValueError("seed must fit in 64 bits")
    return value


def trial_stream(seed: int, trial: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed & _MASK64, counter=[0, 0, 0, trial]))


def _choose(k: int, p: ProbabilityTriple) -> AttachmentType:
    # u = k / 2^53 compared exactly against the rational thresholds
    if k * p.a.denominator < p.a.numerator * _SCALE:
        return AttachmentType.ORTHO
    ab = p.a + p.b
    if k * ab.denominator < ab.numerator * _SCALE:
        return AttachmentType.META
    return AttachmentType.PARA


def sample_sequence(n: int, p: ProbabilityTriple, stream: np.random.Generator) -> AttachmentSequence:
    if n < 0:
        raise ValueError("n must be non-negative")
    k = max(n - 2, 0)
    draws = stream.integers(0, _SCALE, size=k, dtype=np.uint64) if k else ()
    return AttachmentSequence(n, tuple(_choose(int(u), p) for u in draws))


@dataclass(frozen=True)
class McEstimate:
    mean: mpf
    std_dev: mpf
    std_err: mpf
    trials: int
    n: int
    kind: IndexKind
    total: int = 0
    total_sq: int = 0


@lru_cache(maxsize=1 << 16)
def _cached_count(seq: AttachmentSequence, kind: IndexKind) -> int:
    return count_chain(seq, kind)


def _run_block(args) -> Tuple[int, int]:
    n, p, start, stop, seed, kind = args
    s = s2 = 0
    for i in range(start, stop):
        x = _cached_count(sample_sequence(n, p, trial_stream(seed, i)), kind)
        s += x
        s2 += x * x
    return s, s2


def monte_carlo(
    n: int,
    p: ProbabilityTriple,
    trials: int,
    seed: int,
    kind: IndexKind,
    workers: Optional[int] = None,
    block: int = 4096,
) -> McEstimate:
    """Sample mean of the index over ``trials`` random chains.

    Sums are kept as exact integers and converted once at the end.
    ``std_dev`` uses the unbiased (n - 1) estimator; it is 0 for one trial.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    blocks = [(n, p, lo, min(lo + block, trials), seed, kind) for lo in range(0, trials, block)]
    if workers and workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_block, blocks))
    else:
        parts = [_run_block(b) for b in blocks]
    total = sum(s for s, _ in parts)
    total_sq = sum(s2 for _, s2 in parts)
    mean = Fraction(total, trials)
    var = Fraction(total_sq * trials - total * total, trials * (trials - 1)) if trials > 1 else Fraction(0)
    with mp.workdps(max(30, len(str(total_sq)) + 10)):
        mean_f = mpf(mean.numerator) / mean.denominator
        sd = mpmath.sqrt(mpf(var.numerator) / var.denominator)
        se = sd / mpmath.sqrt(trials)
    return McEstimate(mean_f, sd, se, trials, n, kind, total, total_sq)
