"""Turyn composition of sequence pairs and the width-extending construction.

The composition takes a first pair (a, b) of length N and a second pair
(c, d) of length M and produces

    s = c (x) (a+b)/2  -  rev(d) (x) (b-a)/2
    t = d (x) (a+b)/2  +  rev(c) (x) (b-a)/2

of length M*N, where (x) is the block-indexing Kronecker product. The
half-sum and half-difference of a binary pair have disjoint supports, so
every output entry is again +-1.

Composing two GCPs yields a GCP. Composing a GCP with an (M, Z)-CZCP
yields an (NM, NZ)-CZCP, and when the first pair is itself a CZCP of
width Z_A and the middle-column sign condition holds, the width improves
to (M/2 - 1)*N + Z_A with the composite AACS vanishing everywhere except
shifts 0 and MN/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .sequences import BinarySequence, SequencePair, kronecker
from .verify import (
    PairVerdict,
    classify,
    czcp_width,
    golay_factorization,
    is_gcp,
    lemma9_condition_holds,
)


class ConstructionError(ValueError):
    """A construction precondition failed; `code` is machine-readable."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def turyn_compose(first_pair, second_pair):
    """Compose (a,b) of length N with (c,d) of length M into a length-M*N pair."""
    a = first_pair.first.values.astype(np.int64)
    b = first_pair.second.values.astype(np.int64)
    c, d = second_pair.first, second_pair.second
    half_sum = (a + b) // 2
    half_diff = (b - a) // 2
    s = kronecker(c, half_sum) - kronecker(d.reverse(), half_diff)
    t = kronecker(d, half_sum) + kronecker(c.reverse(), half_diff)
    return SequencePair(BinarySequence(s), BinarySequence(t))


def condition_eq4_holds(first_pair, second_pair):
    """Sign condition coupling the leading signs of (a,b) to (c,d)'s middle columns."""
    m = second_pair.n
    if m % 2:
        raise ValueError("second pair must have even length")
    r = first_pair.first[0] * first_pair.second[0]
    c, d = second_pair.first, second_pair.second
    k = c[0] * d[0]
    x = c[m // 2 - 1] - k * d[m // 2 - 1]
    y = c[m // 2] + k * d[m // 2]
    return (r + 1) * x + (r - 1) * y == 0


def normalize_gcp_for_theorem(pair):
    """Fix a0 = -b0 for a GCP by negating the second member when needed."""
    if not is_gcp(pair):
        raise ConstructionError("not_gcp", "normalization requires a GCP")
    if pair.first[0] == pair.second[0]:
        return SequencePair(pair.first, pair.second.negate())
    return pair


@dataclass(frozen=True)
class ConstructionReport:
    """Outcome of a composition: the pair, the guarantee, and what backs it."""

    pair: SequencePair
    guaranteed_width: int
    measured_width: int
    basis: str  # "theorem1" or "lemma8"
    condition_eq4: Optional[bool]
    normalized: bool
    verdict: PairVerdict
    warnings: tuple = field(default=())


def _require_gcp(pair, what="first pair"):
    if not is_gcp(pair):
        raise ConstructionError("not_gcp", f"{what} is not a GCP")


def _require_theorem1_seed(seed):
    m = seed.n
    if m % 2:
        raise ConstructionError("seed_odd_length", "seed length must be even")
    if golay_factorization(m) is not None:
        raise ConstructionError(
            "seed_golay_length",
            f"seed length {m} is a Golay number; the width argument needs a non-Golay length",
        )
    z = czcp_width(seed)
    if z != m // 2 - 1:
        raise ConstructionError(
            "seed_not_optimal",
            f"seed must be an optimal ({m}, {m // 2 - 1})-CZCP, measured width {z}",
        )
    if not lemma9_condition_holds(seed):
        raise ConstructionError(
            "seed_eq3",
            "seed violates the middle-column product condition",
        )


def construct_theorem1(gcp_pair, seed, auto_normalize=False):
    """Width-extending composition of a GCP/CZCP with an optimal seed CZCP.

    The guarantee is (M/2-1)*N + Z_A when the sign condition holds for the
    (possibly normalized) GCP, and the weaker (M/2-1)*N otherwise.
    """
    _require_gcp(gcp_pair)
    _require_theorem1_seed(seed)
    n = gcp_pair.n
    m = seed.n
    z_a = czcp_width(gcp_pair)
    if z_a < 1:
        raise ConstructionError("gcp_zone_zero", "GCP has no cross-correlation zone")

    warnings = []
    chosen = gcp_pair
    normalized = False
    if not condition_eq4_holds(chosen, seed) and auto_normalize:
        flipped = SequencePair(gcp_pair.first, gcp_pair.second.negate())
        if condition_eq4_holds(flipped, seed):
            chosen = flipped
            normalized = True
    eq4 = condition_eq4_holds(chosen, seed)
    if eq4:
        guaranteed = (m // 2 - 1) * n + z_a
        basis = "theorem1"
    else:
        guaranteed = (m // 2 - 1) * n
        basis = "lemma8"
        warnings.append(
            "sign condition fails; only the compositional width (M/2-1)*N is guaranteed"
        )

    out = turyn_compose(chosen, seed)
    verdict = classify(out)
    return ConstructionReport(
        pair=out,
        guaranteed_width=guaranteed,
        measured_width=verdict.czcp_width,
        basis=basis,
        condition_eq4=eq4,
        normalized=normalized,
        verdict=verdict,
        warnings=tuple(warnings),
    )


def construct_lemma8(gcp_pair, czcp_pair):
    """Compose a GCP with any CZCP; the width guarantee is N * Z_B."""
    _require_gcp(gcp_pair)
    z_b = czcp_width(czcp_pair)
    if z_b < 1:
        raise ConstructionError("seed_not_czcp", "second pair is not a CZCP")
    out = turyn_compose(gcp_pair, czcp_pair)
    verdict = classify(out)
    return ConstructionReport(
        pair=out,
        guaranteed_width=gcp_pair.n * z_b,
        measured_width=verdict.czcp_width,
        basis="lemma8",
        condition_eq4=None,
        normalized=False,
        verdict=verdict,
    )


def construct_gcp(first_gcp, second_gcp):
    """Compose two GCPs into a GCP of the product length."""
    _require_gcp(first_gcp, "first pair")
    _require_gcp(second_gcp, "second pair")
    out = turyn_compose(first_gcp, second_gcp)
    verdict = classify(out)
    return ConstructionReport(
        pair=out,
        guaranteed_width=first_gcp.n * czcp_width(second_gcp),
        measured_width=verdict.czcp_width,
        basis="lemma8",
        condition_eq4=None,
        normalized=False,
        verdict=verdict,
    )
