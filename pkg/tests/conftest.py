"""Shared helpers: seeded randomness and independent reference oracles.

The reference implementations here are deliberately written from the bare
definitions (explicit index loops, no numpy, no shared code with the
package) so the package's optimized paths are checked against something
that cannot inherit their bugs.
"""

import random

import pytest

from czcp.sequences import BinarySequence, SequencePair


@pytest.fixture
def rng():
    return random.Random(0xC2C9)


def random_sequence(rng, n):
    return BinarySequence([rng.choice((1, -1)) for _ in range(n)])


def random_pair(rng, n):
    return SequencePair(random_sequence(rng, n), random_sequence(rng, n))


def ref_accf(a, b, u):
    """Definition-level cross-correlation, all branches."""
    n = len(a)
    assert len(b) == n
    if abs(u) >= n:
        return 0
    if u >= 0:
        return sum(a[i] * b[i + u] for i in range(n - u))
    return sum(a[i - u] * b[i] for i in range(n + u))


def ref_aacs(pair, u):
    a = list(pair.first)
    b = list(pair.second)
    return ref_accf(a, a, u) + ref_accf(b, b, u)


def ref_accs(pair, u):
    a = list(pair.first)
    b = list(pair.second)
    return ref_accf(a, b, u) + ref_accf(b, a, u)


def ref_zcp_width(pair):
    """Largest Z with AACS zero strictly below Z, by direct scan."""
    n = pair.n
    for width in range(n, 0, -1):
        if all(ref_aacs(pair, u) == 0 for u in range(1, width)):
            return width
    return 1


def ref_czcp_width(pair):
    """Scan every Z from the cap down; first Z whose zones hold wins."""
    n = pair.n
    for z in range(n // 2, 0, -1):
        t1 = range(1, z + 1)
        t2 = range(n - z, n)
        c1 = all(ref_aacs(pair, u) == 0 for u in t1) and all(
            ref_aacs(pair, u) == 0 for u in t2
        )
        c2 = all(ref_accs(pair, u) == 0 for u in t2)
        if c1 and c2:
            return z
    return 0
