"""Exact aperiodic correlation functions and per-shift sum profiles.

Three routes to the same numbers, kept deliberately redundant:

* accf/aacf: the definitional double-loop sums in pure integer Python
  (the oracle everything else is tested against);
* profile functions: np.correlate on int64 arrays (exact, fast);
* packed popcount kernel: sequences packed one bit per element for the
  exhaustive search's inner loop.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sequences import BinarySequence, SequencePair


def accf(a, b, u):
    """Aperiodic cross-correlation of equal-length sequences at shift u.

    Sum of a[i]*b[i+u] over the overlap for 0 <= u <= N-1, the mirrored
    sum for negative u, and 0 once |u| >= N.
    """
    if a.n != b.n:
        raise ValueError(f"length mismatch: {a.n} vs {b.n}")
    n = a.n
    if abs(u) >= n:
        return 0
    if u >= 0:
        return sum(a[i] * b[i + u] for i in range(n - u))
    return sum(a[i - u] * b[i] for i in range(n + u))


def aacf(a, u):
    """Aperiodic autocorrelation: accf(a, a, u)."""
    return accf(a, a, u)


def _corr_tail(x, y):
    # rho(x, y; u) for u = 0..N-1 as an int64 vector
    xv = x.values.astype(np.int64)
    yv = y.values.astype(np.int64)
    return np.correlate(yv, xv, mode="full")[x.n - 1 :]


def aacs_profile(pair):
    """Vector of rho(first;u) + rho(second;u) for u = 0..N-1."""
    return _corr_tail(pair.first, pair.first) + _corr_tail(pair.second, pair.second)


def accs_profile(pair):
    """Vector of rho(first,second;u) + rho(second,first;u) for u = 0..N-1."""
    return _corr_tail(pair.first, pair.second) + _corr_tail(pair.second, pair.first)


@dataclass(frozen=True)
class CorrelationProfile:
    """Per-shift AACS and ACCS sums of a pair, shifts 0..N-1."""

    aacs: tuple
    accs: tuple

    @classmethod
    def of(cls, pair):
        return cls(
            aacs=tuple(int(v) for v in aacs_profile(pair)),
            accs=tuple(int(v) for v in accs_profile(pair)),
        )

    @property
    def n(self):
        return len(self.aacs)


# --- packed bit-parallel kernel -------------------------------------------
#
# Bit i set <=> element i is -1. A correlation sum over an overlap of k
# positions equals k - 2*popcount(disagreements).


def pack_bits(seq):
    """Pack a BinarySequence (or +-1 iterable) into an int, bit i = (elem i < 0)."""
    word = 0
    for i, v in enumerate(seq):
        if v < 0:
            word |= 1 << i
    return word


def packed_accf(xa, xb, n, u):
    """accf at shift u >= 0 from packed words of length-n sequences."""
    if u >= n:
        return 0
    overlap = n - u
    diff = (xa ^ (xb >> u)) & ((1 << overlap) - 1)
    return overlap - 2 * diff.bit_count()


def packed_aacs(xa, xb, n, u):
    """AACS at shift u >= 0 from the packed words of a pair."""
    return packed_accf(xa, xa, n, u) + packed_accf(xb, xb, n, u)
