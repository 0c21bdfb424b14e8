"""Classification of sequence pairs: ZCP/CZCP widths, GCP status, ratios.

Width conventions (all shifts positive; negative shifts follow by symmetry):

* ZCP width: largest Z with AACS zero at every shift 0 < u < Z
  (a pair whose AACS vanishes at all nonzero shifts is a GCP, width N).
* CZCP width: largest Z <= N/2 with AACS zero on {1..Z} and {N-Z..N-1}
  and ACCS zero on {N-Z..N-1}. Width 0 means "not a CZCP".
* The CZC ratio divides the width by N/2 for perfect pairs and by
  N/2 - 1 otherwise; it is kept as an exact Fraction and only defined
  for even N.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .correlation import aacs_profile, accs_profile


@dataclass(frozen=True)
class GolayFactorization:
    """Exponents (alpha, beta, gamma) with n = 2^alpha * 10^beta * 26^gamma."""

    alpha: int
    beta: int
    gamma: int

    @property
    def n(self):
        return 2**self.alpha * 10**self.beta * 26**self.gamma


def golay_factorization(n):
    """Return the unique GolayFactorization of n, or None if n is not a Golay number."""
    if n < 1:
        raise ValueError("n must be positive")
    m, beta, gamma, twos = n, 0, 0, 0
    while m % 5 == 0:
        m //= 5
        beta += 1
    while m % 13 == 0:
        m //= 13
        gamma += 1
    while m % 2 == 0:
        m //= 2
        twos += 1
    alpha = twos - beta - gamma
    if m != 1 or alpha < 0:
        return None
    return GolayFactorization(alpha, beta, gamma)


def zcp_width(pair):
    """Largest Z with AACS zero for all 0 < u < Z; N when the pair is a GCP."""
    aacs = aacs_profile(pair)
    nz = np.nonzero(aacs[1:])[0]
    return pair.n if nz.size == 0 else int(nz[0]) + 1


def czcp_width(pair):
    """Largest Z <= N/2 satisfying both CZCP zone conditions (0 if none)."""
    n = pair.n
    aacs = aacs_profile(pair)
    accs = accs_profile(pair)
    caps = [n // 2]
    head = np.nonzero(aacs[1:])[0]
    caps.append(int(head[0]) if head.size else n)  # AACS zero through Z: Z <= first_nz - 1
    for prof in (aacs, accs):
        tail = np.nonzero(prof[1:])[0]
        if tail.size:
            caps.append(n - 1 - (int(tail[-1]) + 1))  # zero for u >= N-Z: Z <= N-1-last_nz
        else:
            caps.append(n)
    return max(0, min(caps))


def is_gcp(pair):
    return zcp_width(pair) == pair.n


def czc_ratio(pair):
    """Exact CZC ratio Z / Z_max for even-length pairs."""
    n = pair.n
    if n % 2:
        raise ValueError("CZC ratio is defined for even lengths only")
    z = czcp_width(pair)
    if z == n // 2:
        return Fraction(1)
    if z == 0:
        return Fraction(0)
    return Fraction(z, n // 2 - 1)


def lemma5_structure_holds(pair, z):
    """Half-sequence structure necessary for an (N, Z)-CZCP.

    For i < Z: first[i] == k*second[i] and first[N-1-i] == -k*second[N-1-i],
    with k the product of the two leading signs.
    """
    n = pair.n
    if not 0 <= z <= n // 2:
        raise ValueError(f"Z must lie in [0, {n // 2}]")
    a, b = pair.first, pair.second
    k = a[0] * b[0]
    for i in range(z):
        if a[i] != k * b[i] or a[n - 1 - i] != -k * b[n - 1 - i]:
            return False
    return True


def lemma9_condition_holds(pair):
    """Vanishing-product condition on the two middle columns of an even pair.

    True iff (c[M/2-1] - k*d[M/2-1]) * (c[M/2] + k*d[M/2]) == 0 with
    k = d0/c0. For optimal non-Golay-length pairs this pins |AACS(M/2)| = 2.
    """
    m = pair.n
    if m % 2:
        raise ValueError("even length required")
    c, d = pair.first, pair.second
    k = c[0] * d[0]
    x = c[m // 2 - 1] - k * d[m // 2 - 1]
    y = c[m // 2] + k * d[m // 2]
    return x * y == 0


@dataclass(frozen=True)
class PairVerdict:
    """Full classification record for one pair."""

    n: int
    zcp_width: int
    czcp_width: int
    is_gcp: bool
    is_perfect: bool
    is_optimal: bool
    czc_ratio: Optional[Fraction]  # None when N is odd (ratio unsupported)
    z_max: Optional[int]
    mid_aacs: Optional[int]
    golay: Optional[GolayFactorization]


def classify(pair):
    """Populate a PairVerdict for the pair; never raises on odd lengths."""
    n = pair.n
    z_zcp = zcp_width(pair)
    z = czcp_width(pair)
    gcp = z_zcp == n
    if n % 2:
        perfect = False
        ratio = None
        z_max = None
        mid = None
    else:
        perfect = z == n // 2
        z_max = n // 2 if perfect else n // 2 - 1
        ratio = czc_ratio(pair)
        mid = int(aacs_profile(pair)[n // 2])
    return PairVerdict(
        n=n,
        zcp_width=z_zcp,
        czcp_width=z,
        is_gcp=gcp,
        is_perfect=perfect,
        is_optimal=ratio == 1,
        czc_ratio=ratio,
        z_max=z_max,
        mid_aacs=mid,
        golay=golay_factorization(n),
    )
