import pytest

from czcp import catalog
from czcp.correlation import aacs_profile, accs_profile
from czcp.sequences import SequencePair
from czcp.turyn import (
    ConstructionError,
    condition_eq4_holds,
    construct_gcp,
    construct_lemma8,
    construct_theorem1,
    normalize_gcp_for_theorem,
    turyn_compose,
)
from czcp.verify import classify, czcp_width, is_gcp

from conftest import random_pair

GCP2 = SequencePair.from_texts("+-", "--")


def test_compose_length2_kernels():
    out = turyn_compose(GCP2, GCP2)
    assert out.texts() == ("---+", "++-+")
    v = classify(out)
    assert v.is_gcp and v.is_perfect


def test_compose_reproduces_worked_example():
    rep = turyn_compose(catalog.get("GCP10").pair, catalog.seed("K6").pair)
    assert rep == catalog.get("EX1").pair


def test_compose_length(rng):
    a = random_pair(rng, 5)
    b = random_pair(rng, 7)
    out = turyn_compose(a, b)
    assert out.n == 35


def test_compose_always_binary(rng):
    # BinarySequence construction would reject anything outside {+1,-1}
    for _ in range(200):
        a = random_pair(rng, rng.randint(1, 8))
        b = random_pair(rng, rng.randint(1, 8))
        out = turyn_compose(a, b)
        assert set(out.first) <= {1, -1} and set(out.second) <= {1, -1}


def test_gcp_closure_up_to_length_80():
    kernels = [catalog.get(k).pair for k in ("GCP2", "GCP10", "GCP26")]
    composed = [catalog.golay_pair(n) for n in (4, 8, 20, 40)]
    for a in kernels + composed:
        for b in kernels + composed:
            if a.n * b.n <= 80:
                assert is_gcp(turyn_compose(a, b))


def test_condition_eq4_normalized_gcp_with_seed():
    assert condition_eq4_holds(GCP2, catalog.seed("K6").pair)


def test_condition_eq4_unnormalized_gcp_fails():
    unnormalized = SequencePair.from_texts("+-", "++")
    assert is_gcp(unnormalized)
    assert not condition_eq4_holds(unnormalized, catalog.seed("K6").pair)


def test_condition_eq4_invariant_under_joint_negation(rng):
    seeds = [catalog.seed(e).pair for e in ("K6", "K12", "K24", "K28")]
    for _ in range(50):
        a = random_pair(rng, rng.randint(1, 6))
        neg = SequencePair(a.first.negate(), a.second.negate())
        for b in seeds:
            assert condition_eq4_holds(a, b) == condition_eq4_holds(neg, b)


def test_normalize_flips_matching_leading_signs():
    out = normalize_gcp_for_theorem(SequencePair.from_texts("+-", "++"))
    assert out.texts() == ("+-", "--")


def test_normalize_keeps_already_normalized():
    assert normalize_gcp_for_theorem(GCP2) == GCP2


def test_normalize_preserves_width():
    for n in (2, 4, 8, 10, 16, 20):
        pair = catalog.golay_pair(n)
        assert czcp_width(normalize_gcp_for_theorem(pair)) == czcp_width(pair)


def test_normalize_rejects_non_gcp():
    with pytest.raises(ConstructionError):
        normalize_gcp_for_theorem(catalog.seed("K6").pair)


def test_theorem1_composed_table_row12():
    rep = construct_theorem1(GCP2, catalog.seed("K6").pair)
    assert rep.pair == catalog.get("T2K12").pair
    assert rep.guaranteed_width == 5
    assert rep.measured_width == 5
    assert rep.basis == "theorem1" and rep.condition_eq4
    assert list(aacs_profile(rep.pair)) == [24, 0, 0, 0, 0, 0, -4, 0, 0, 0, 0, 0]


def test_theorem1_worked_example():
    rep = construct_theorem1(catalog.get("GCP10").pair, catalog.seed("K6").pair)
    entry = catalog.get("EX1")
    assert rep.pair == entry.pair
    assert rep.guaranteed_width == 24 and rep.measured_width == 24
    assert tuple(aacs_profile(rep.pair)) == entry.aacs
    assert tuple(accs_profile(rep.pair)) == entry.accs


def test_theorem1_composed_table_row56():
    rep = construct_theorem1(GCP2, catalog.seed("K28").pair)
    assert rep.pair == catalog.get("T2K56").pair
    assert list(aacs_profile(rep.pair)) == [112] + [0] * 27 + [-4] + [0] * 27


def test_theorem1_rejects_non_gcp_first():
    with pytest.raises(ConstructionError) as exc:
        construct_theorem1(catalog.seed("K6").pair, catalog.seed("K6").pair)
    assert exc.value.code == "not_gcp"


def test_theorem1_rejects_golay_length_seed():
    with pytest.raises(ConstructionError) as exc:
        construct_theorem1(GCP2, catalog.golay_pair(4))
    assert exc.value.code == "seed_golay_length"


def test_theorem1_rejects_suboptimal_seed(rng):
    while True:
        p = random_pair(rng, 6)
        if czcp_width(p) != 2:
            break
    with pytest.raises(ConstructionError) as exc:
        construct_theorem1(GCP2, p)
    assert exc.value.code == "seed_not_optimal"


def test_theorem1_rejects_seed_violating_middle_condition():
    # the composed (48,23) pair is optimal but has |mid AACS| = 4
    with pytest.raises(ConstructionError) as exc:
        construct_theorem1(GCP2, catalog.get("K48").pair)
    assert exc.value.code == "seed_eq3"


def test_theorem1_degrades_without_normalization():
    unnormalized = SequencePair.from_texts("+-", "++")
    rep = construct_theorem1(unnormalized, catalog.seed("K6").pair)
    assert rep.basis == "lemma8" and not rep.condition_eq4
    assert rep.guaranteed_width == 4  # (M/2-1)*N only
    assert rep.measured_width >= 4
    assert rep.warnings


def test_theorem1_auto_normalize_restores_guarantee():
    unnormalized = SequencePair.from_texts("+-", "++")
    rep = construct_theorem1(unnormalized, catalog.seed("K6").pair, auto_normalize=True)
    assert rep.normalized and rep.condition_eq4 and rep.basis == "theorem1"
    assert rep.guaranteed_width == 5
    # profile identical to the one from the already-normalized equivalent
    direct = construct_theorem1(GCP2, catalog.seed("K6").pair)
    assert list(aacs_profile(rep.pair)) == list(aacs_profile(direct.pair))


def test_lemma8_composed48():
    rep = construct_lemma8(catalog.golay_pair(4), catalog.get("K48").pair)
    assert rep.guaranteed_width == 4 * 23 == 92
    assert rep.measured_width >= 92
    assert rep.pair.n == 192


def test_lemma8_composed56():
    rep = construct_lemma8(GCP2, catalog.get("K56").pair)
    assert rep.guaranteed_width == 54
    assert rep.measured_width >= 54
    assert rep.pair.n == 112


def test_lemma8_perfect_times_perfect():
    rep = construct_lemma8(GCP2, GCP2)
    v = classify(rep.pair)
    assert rep.guaranteed_width == 2 and v.is_perfect and v.n == 4


def test_lemma8_rejects_non_gcp():
    with pytest.raises(ConstructionError):
        construct_lemma8(catalog.seed("K6").pair, GCP2)


def test_lemma8_width_property(rng):
    gcps = [catalog.golay_pair(n) for n in (2, 4, 10)]
    seeds = [catalog.seed(e).pair for e in ("K6", "K12")]
    for a in gcps:
        for b in seeds:
            rep = construct_lemma8(a, b)
            assert rep.measured_width >= a.n * czcp_width(b)


def test_construct_gcp_mode():
    rep = construct_gcp(GCP2, catalog.get("GCP10").pair)
    assert rep.pair.n == 20 and rep.verdict.is_gcp
    with pytest.raises(ConstructionError):
        construct_gcp(GCP2, catalog.seed("K6").pair)


def test_reports_never_overpromise(rng):
    # measured >= guaranteed on every construction exercised here
    combos = [
        construct_theorem1(GCP2, catalog.seed(e).pair)
        for e in ("K6", "K12", "K24", "K28")
    ]
    combos.append(construct_lemma8(catalog.golay_pair(8), catalog.seed("K6").pair))
    for rep in combos:
        assert rep.measured_width >= rep.guaranteed_width
