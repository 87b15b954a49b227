"""Level-wise miners for frequent order-preserving patterns and strong rules.

The default miner seeds the length-2 patterns by a single scan, then grows
candidates level by level through pattern fusion and computes each candidate's
occurrences by joining the end-lists of its two sub-patterns.  Two dynamic
optimizations are layered on top:

* screening - an end position that produced a super-pattern occurrence is
  removed from the per-level prefix/suffix working lists (it belongs to
  exactly one super-pattern, so keeping it only wastes probes);
* pruning - a pattern whose working list has shrunk below ``minsup`` is
  skipped as fusion prefix (or suffix), since any super-pattern it could
  produce is provably infrequent.

Ablation variants disable these pieces one by one; ``mat_based`` keeps fusion
candidate generation but recomputes every support by rescanning the series,
and ``efo_enum`` replaces fusion with blind enumeration of rank extensions.
All variants return identical frequent sets and supports; only the
instrumentation counters differ.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Sequence

from .core import (
    ASCENT,
    DESCENT,
    Ends,
    Pattern,
    can_fuse,
    enumerate_extensions,
    fuse,
    scan_length2,
    spf_join,
    suffix_pattern,
)
from .matching import naive_support

VARIANTS = ("efo_miner", "efo_prun", "efo_scrn", "efo_enum", "mat_based")


@dataclass
class MinerConfig:
    """Mining parameters.  ``minsup`` is an absolute occurrence count."""

    minsup: int
    minconf: float = 0.5
    variant: str = "efo_miner"
    max_pattern_len: int | None = None

    def __post_init__(self) -> None:
        self.variant = self.variant.replace("-", "_")
        if self.minsup < 1:
            raise ValueError(f"minsup must be >= 1, got {self.minsup}")
        if not 0.0 < self.minconf <= 1.0:
            raise ValueError(f"minconf must be in (0, 1], got {self.minconf}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}; expected one of {VARIANTS}")
        if self.max_pattern_len is not None and self.max_pattern_len < 2:
            raise ValueError("max_pattern_len must be >= 2 when set")


@dataclass
class MiningStats:
    """Instrumentation counters for one mining run.

    ``candidates_checked`` counts every pattern whose frequency was decided,
    including the two length-2 seeds.  ``element_comparisons`` counts
    end-list probe pairs in the sorted-merge join (or, for the rescan
    variant, pairwise value comparisons spent re-ranking windows).  The
    ``peak_live_entries`` probe tracks the largest number of occurrence-list
    entries simultaneously retained (result lists + per-level working copies
    + candidates), for the O(patterns x series length) storage check.
    """

    candidates_checked: int = 0
    element_comparisons: int = 0
    wall_time_ms: float = 0.0
    peak_live_entries: int = 0
    max_level_patterns: int = 0
    max_level_candidates: int = 0


@dataclass(frozen=True)
class PatternOccurrences:
    """Support plus per-sequence end positions; support == total ends."""

    support: int
    ends: tuple[Ends, ...]


@dataclass
class MiningResult:
    frequent: dict[Pattern, PatternOccurrences]
    stats: MiningStats
    minsup: int
    n_sequences: int

    def supports(self) -> dict[Pattern, int]:
        return {p: occ.support for p, occ in self.frequent.items()}

    def ends(self, p: Pattern) -> Ends:
        """Single-sequence convenience accessor."""
        if self.n_sequences != 1:
            raise ValueError("ends() is only defined for single-sequence results")
        return self.frequent[p].ends[0]


@dataclass(frozen=True)
class OpRule:
    """Rule antecedent -> consequent, where antecedent is the consequent's
    prefix pattern.  Confidence is sup(consequent) / sup(antecedent)."""

    antecedent: Pattern
    consequent: Pattern
    sup_x: int
    sup_y: int

    @property
    def confidence(self) -> float:
        return self.sup_y / self.sup_x


def _total(per_seq: Sequence[Sequence[int]]) -> int:
    return sum(len(e) for e in per_seq)


class _StorageProbe:
    """Running account of retained occurrence-list entries."""

    def __init__(self, stats: MiningStats) -> None:
        self.stats = stats
        self.result_entries = 0
        self.working_entries = 0
        self.next_entries = 0

    def checkpoint(self, transient: int = 0) -> None:
        live = self.result_entries + self.working_entries + self.next_entries + transient
        if live > self.stats.peak_live_entries:
            self.stats.peak_live_entries = live


def _mine(
    sequences: Sequence[Sequence[float]],
    cfg: MinerConfig,
    *,
    collect_rules: bool = False,
) -> tuple[MiningResult, list[OpRule]]:
    t0 = time.perf_counter()
    stats = MiningStats()
    probe = _StorageProbe(stats)
    variant = cfg.variant
    screening = variant in ("efo_miner", "efo_prun")
    pruning = variant == "efo_miner"
    rescan = variant == "mat_based"
    enumerate_candidates = variant == "efo_enum"
    minsup = cfg.minsup
    max_len = cfg.max_pattern_len

    frequent: dict[Pattern, PatternOccurrences] = {}
    rules: list[OpRule] = []

    # Seed level: one scan per sequence yields both length-2 patterns.
    seed_lists: dict[Pattern, list[Ends]] = {ASCENT: [], DESCENT: []}
    for seq in sequences:
        up, down = scan_length2(seq)
        seed_lists[ASCENT].append(up)
        seed_lists[DESCENT].append(down)
    stats.candidates_checked += 2
    level: dict[Pattern, list[Ends]] = {}
    for pat in (ASCENT, DESCENT):
        per_seq = seed_lists[pat]
        if _total(per_seq) >= minsup:
            level[pat] = per_seq
            frequent[pat] = PatternOccurrences(_total(per_seq), tuple(per_seq))
            probe.result_entries += _total(per_seq)
    probe.checkpoint()

    def admit(pattern: Pattern, per_seq: list[Ends], parent: Pattern,
              next_level: dict[Pattern, list[Ends]]) -> None:
        support = _total(per_seq)
        sup_parent = frequent[parent].support
        assert support <= sup_parent, "anti-monotonicity violated"
        if support < minsup:
            return
        # each candidate is generated exactly once per level
        assert pattern not in next_level, f"duplicate candidate {pattern!r}"
        next_level[pattern] = per_seq
        frequent[pattern] = PatternOccurrences(support, tuple(per_seq))
        probe.result_entries += support
        probe.next_entries += support
        if collect_rules and support / sup_parent >= cfg.minconf:
            rules.append(OpRule(parent, pattern, sup_parent, support))

    m = 2
    while level and (max_len is None or m < max_len):
        order = sorted(level)
        stats.max_level_patterns = max(stats.max_level_patterns, len(order))
        next_level: dict[Pattern, list[Ends]] = {}
        probe.next_entries = 0
        level_candidates = 0

        if enumerate_candidates:
            for p in order:
                for ext in enumerate_extensions(p):
                    stats.candidates_checked += 1
                    level_candidates += 1
                    q = suffix_pattern(ext)
                    if q not in level:
                        continue  # suffix infrequent -> candidate provably infrequent
                    r, h = fuse(p, q)
                    assert ext == r or ext == h
                    per_seq: list[Ends] = []
                    for si, seq in enumerate(sequences):
                        ends_r, ends_h, _, _ = spf_join(
                            p, level[p][si], q, level[q][si], seq, stats=stats
                        )
                        per_seq.append(ends_r if ext == r else ends_h)
                    probe.checkpoint(_total(per_seq))
                    admit(ext, per_seq, p, next_level)
        else:
            if rescan:
                working_p = working_s = None
            else:
                # fresh per-level working copies; screening never leaks across levels
                working_p = {p: list(level[p]) for p in order}
                working_s = {p: list(level[p]) for p in order}
                probe.working_entries = 2 * sum(_total(level[p]) for p in order)
                probe.checkpoint()
            for p in order:
                for q in order:
                    if pruning and (
                        _total(working_p[p]) < minsup or _total(working_s[q]) < minsup
                    ):
                        continue
                    if not can_fuse(p, q):
                        continue
                    r, h = fuse(p, q)
                    stats.candidates_checked += 1 if h is None else 2
                    level_candidates += 1 if h is None else 2
                    if rescan:
                        r_per_seq = [naive_support(r, seq, stats=stats) for seq in sequences]
                        h_per_seq = (
                            [naive_support(h, seq, stats=stats) for seq in sequences]
                            if h is not None
                            else None
                        )
                    else:
                        r_per_seq = []
                        h_per_seq = [] if h is not None else None
                        for si, seq in enumerate(sequences):
                            ends_r, ends_h, kept_p, kept_q = spf_join(
                                p,
                                working_p[p][si],
                                q,
                                working_s[q][si],
                                seq,
                                screening=screening,
                                stats=stats,
                            )
                            r_per_seq.append(ends_r)
                            if h_per_seq is not None:
                                h_per_seq.append(ends_h)
                            if screening:
                                probe.working_entries -= (
                                    len(working_p[p][si]) - len(kept_p)
                                ) + (len(working_s[q][si]) - len(kept_q))
                                working_p[p][si] = kept_p
                                working_s[q][si] = kept_q
                    transient = _total(r_per_seq) + (_total(h_per_seq) if h_per_seq else 0)
                    probe.checkpoint(transient)
                    admit(r, r_per_seq, p, next_level)
                    if h is not None:
                        assert h_per_seq is not None
                        admit(h, h_per_seq, p, next_level)
            probe.working_entries = 0
        stats.max_level_candidates = max(stats.max_level_candidates, level_candidates)
        level = next_level
        probe.next_entries = 0
        m += 1

    stats.wall_time_ms = (time.perf_counter() - t0) * 1e3
    result = MiningResult(frequent, stats, minsup, len(sequences))
    return result, rules


def mine_dataset(dataset: Sequence[Sequence[float]], cfg: MinerConfig) -> MiningResult:
    """Mine a multi-sequence dataset with the configured variant.

    Pattern support is the sum of per-sequence supports; windows never cross
    sequence boundaries.  Per-sequence occurrence lists are retained for
    feature extraction.
    """
    if len(dataset) == 0:
        raise ValueError("dataset must contain at least one sequence")
    result, _ = _mine(dataset, cfg)
    return result


def efo_miner(t: Sequence[float], cfg: MinerConfig) -> MiningResult:
    """All frequent patterns of a single series, with exact supports and ends."""
    if cfg.variant != "efo_miner":
        raise ValueError(f"efo_miner requires variant 'efo_miner', got {cfg.variant!r}")
    result, _ = _mine([t], cfg)
    return result


def opr_miner(t: Sequence[float], cfg: MinerConfig) -> tuple[MiningResult, list[OpRule]]:
    """Mine a single series and emit the strong rules found along the way.

    A rule antecedent -> consequent is emitted exactly when the consequent is
    admitted as frequent and sup(consequent)/sup(antecedent) >= minconf; the
    result equals the confidence-filtered set of all prefix-extension rules
    over the frequent patterns.
    """
    return opr_mine_dataset([t], cfg)


def opr_mine_dataset(
    dataset: Sequence[Sequence[float]], cfg: MinerConfig
) -> tuple[MiningResult, list[OpRule]]:
    if len(dataset) == 0:
        raise ValueError("dataset must contain at least one sequence")
    if cfg.variant != "efo_miner":
        cfg = replace(cfg, variant="efo_miner")
    return _mine(dataset, cfg, collect_rules=True)
