import numpy as np
import pytest

from oppmine.baselines import brute_force_frequent, opr_all_rules
from oppmine.core import prefix_pattern, suffix_pattern
from oppmine.miner import (
    VARIANTS,
    MinerConfig,
    OpRule,
    efo_miner,
    mine_dataset,
    opr_mine_dataset,
    opr_miner,
)
from conftest import GOLDEN, GOLDEN_ENDS, GOLDEN_F, GOLDEN_STRONG_RULES


def rule_tuples(rules):
    return {(r.antecedent, r.consequent, r.sup_x, r.sup_y) for r in rules}


def random_series(rng, n):
    if rng.integers(2):
        return rng.integers(0, 9, n).astype(float).tolist()
    return rng.normal(size=n).tolist()


# ------------------------------------------------------------- MinerConfig

def test_config_validation():
    with pytest.raises(ValueError):
        MinerConfig(minsup=0)
    with pytest.raises(ValueError):
        MinerConfig(minsup=3, minconf=0.0)
    with pytest.raises(ValueError):
        MinerConfig(minsup=3, minconf=1.2)
    with pytest.raises(ValueError):
        MinerConfig(minsup=3, variant="nope")
    with pytest.raises(ValueError):
        MinerConfig(minsup=3, max_pattern_len=1)
    assert MinerConfig(minsup=3, variant="efo-miner").variant == "efo_miner"


# --------------------------------------------------------------- efo_miner

def test_efo_miner_golden(golden):
    result = efo_miner(golden, MinerConfig(minsup=3))
    assert result.supports() == GOLDEN_F
    for p, ends in GOLDEN_ENDS.items():
        assert result.ends(p) == ends
    assert result.stats.wall_time_ms > 0


def test_efo_miner_minimal_series():
    result = efo_miner((1, 2), MinerConfig(minsup=1))
    assert result.supports() == {(1, 2): 1}


def test_efo_miner_constant_series():
    result = efo_miner((5, 5, 5, 5), MinerConfig(minsup=1))
    assert result.supports() == {}


def test_efo_miner_empty_series():
    result = efo_miner((), MinerConfig(minsup=1))
    assert result.supports() == {}


def test_efo_miner_rejects_other_variants():
    with pytest.raises(ValueError):
        efo_miner(GOLDEN, MinerConfig(minsup=3, variant="mat_based"))


def test_efo_miner_max_pattern_len(golden):
    result = efo_miner(golden, MinerConfig(minsup=3, max_pattern_len=3))
    assert result.supports() == {p: s for p, s in GOLDEN_F.items() if len(p) <= 3}


def test_efo_miner_deterministic(golden):
    a = efo_miner(golden, MinerConfig(minsup=3))
    b = efo_miner(golden, MinerConfig(minsup=3))
    assert list(a.frequent) == list(b.frequent)
    assert a.supports() == b.supports()
    assert a.stats.candidates_checked == b.stats.candidates_checked
    assert a.stats.element_comparisons == b.stats.element_comparisons


def test_frequent_set_is_lattice_closed():
    rng = np.random.default_rng(11)
    for _ in range(30):
        t = random_series(rng, int(rng.integers(20, 160)))
        result = efo_miner(t, MinerConfig(minsup=int(rng.integers(2, 6))))
        supports = result.supports()
        for p, s in supports.items():
            occ = result.frequent[p]
            assert s == sum(len(e) for e in occ.ends) >= result.minsup
            assert all(b > a for e in occ.ends for a, b in zip(e, e[1:]))
            if len(p) >= 3:
                assert prefix_pattern(p) in supports
                assert suffix_pattern(p) in supports
                assert s <= supports[prefix_pattern(p)]
                assert s <= supports[suffix_pattern(p)]


def test_storage_probe_within_linear_bound():
    rng = np.random.default_rng(5)
    t = rng.normal(size=250).tolist()
    result = efo_miner(t, MinerConfig(minsup=4))
    stats = result.stats
    bound = (
        len(result.frequent) + 2 * stats.max_level_patterns + stats.max_level_candidates
    ) * len(t)
    assert 0 < stats.peak_live_entries <= bound


# --------------------------------------------------------------- opr_miner

def test_opr_miner_golden_strong_rules(golden):
    result, rules = opr_miner(golden, MinerConfig(minsup=3, minconf=0.7))
    assert result.supports() == GOLDEN_F
    assert rule_tuples(rules) == GOLDEN_STRONG_RULES
    assert all(r.confidence >= 0.7 for r in rules)


def test_opr_miner_minconf_one(golden):
    _, rules = opr_miner(golden, MinerConfig(minsup=3, minconf=1.0))
    assert rules == []


def test_opr_miner_tiny_minconf_gives_all_rules(golden):
    result, rules = opr_miner(golden, MinerConfig(minsup=3, minconf=0.01))
    assert rule_tuples(rules) == rule_tuples(opr_all_rules(result))
    assert len(rules) == 4


def test_opr_rule_confidence_exact():
    rule = OpRule((2, 1), (2, 1, 3), 8, 6)
    assert rule.confidence == 6 / 8


def test_opr_miner_rule_set_characterization():
    rng = np.random.default_rng(23)
    for _ in range(25):
        t = random_series(rng, int(rng.integers(20, 200)))
        minconf = float(rng.uniform(0.05, 1.0))
        cfg = MinerConfig(minsup=int(rng.integers(2, 6)), minconf=minconf)
        result, rules = opr_miner(t, cfg)
        expected = {
            (x, y)
            for y in result.frequent
            if len(y) >= 3
            for x in [prefix_pattern(y)]
            if x in result.frequent
            and result.frequent[y].support / result.frequent[x].support >= minconf
        }
        assert {(r.antecedent, r.consequent) for r in rules} == expected
        assert all(r.sup_x == result.frequent[r.antecedent].support for r in rules)
        assert all(r.sup_y == result.frequent[r.consequent].support for r in rules)


# ------------------------------------------------------------ mine_dataset

def test_mine_dataset_additivity(golden):
    doubled = mine_dataset([golden, golden], MinerConfig(minsup=6))
    assert doubled.supports() == {p: 2 * s for p, s in GOLDEN_F.items()}
    single = efo_miner(golden, MinerConfig(minsup=3))
    for p, occ in doubled.frequent.items():
        assert occ.ends == (single.ends(p), single.ends(p))


def test_mine_dataset_simple():
    result = mine_dataset([(1, 2, 3)], MinerConfig(minsup=1))
    assert result.supports() == {(1, 2): 2, (1, 2, 3): 1}


def test_mine_dataset_no_cross_boundary():
    result = mine_dataset([(1, 2), (2, 1)], MinerConfig(minsup=1))
    assert result.supports() == {(1, 2): 1, (2, 1): 1}


def test_mine_dataset_rejects_empty():
    with pytest.raises(ValueError):
        mine_dataset([], MinerConfig(minsup=1))


def test_mine_dataset_matches_per_sequence_sum():
    rng = np.random.default_rng(31)
    dataset = [random_series(rng, int(rng.integers(15, 80))) for _ in range(4)]
    result = mine_dataset(dataset, MinerConfig(minsup=4, max_pattern_len=5))
    per_seq = [brute_force_frequent(s, 1, 5).supports() for s in dataset]
    for p, support in result.supports().items():
        assert support == sum(sp.get(p, 0) for sp in per_seq) >= 4
    # completeness: any pattern with summed support >= minsup must be found
    candidates = set().union(*per_seq)
    for p in candidates:
        if sum(sp.get(p, 0) for sp in per_seq) >= 4:
            assert p in result.frequent


def test_opr_mine_dataset_rules(golden):
    _, rules = opr_mine_dataset([golden, golden], MinerConfig(minsup=6, minconf=0.7))
    assert {(r.antecedent, r.consequent) for r in rules} == {
        (a, c) for a, c, _, _ in GOLDEN_STRONG_RULES
    }
    # confidences are scale-invariant under dataset duplication
    assert all(r.confidence == r.sup_y / r.sup_x for r in rules)


# ---------------------------------------------------------------- counters

def test_counters_monotone_in_variant(golden):
    by_variant = {
        v: mine_dataset([golden], MinerConfig(minsup=3, variant=v)) for v in VARIANTS
    }
    stats = {v: r.stats for v, r in by_variant.items()}
    assert (
        stats["efo_miner"].candidates_checked
        <= stats["efo_prun"].candidates_checked
        <= stats["efo_enum"].candidates_checked
    )
    assert stats["efo_miner"].element_comparisons <= stats["efo_scrn"].element_comparisons
    assert stats["efo_prun"].element_comparisons <= stats["efo_scrn"].element_comparisons
    # rescanning pays strictly more than the join-based default here
    assert stats["mat_based"].candidates_checked > stats["efo_miner"].candidates_checked
    assert stats["mat_based"].element_comparisons > stats["efo_miner"].element_comparisons


def test_minsup_monotonicity():
    rng = np.random.default_rng(41)
    t = random_series(rng, 150)
    counts = [
        len(efo_miner(t, MinerConfig(minsup=ms)).frequent) for ms in range(2, 10)
    ]
    assert counts == sorted(counts, reverse=True)
