"""Reference and ablation mining paths.

``brute_force_frequent`` is the ground-truth oracle: it enumerates every rank
permutation up to a length cap and counts occurrences by direct window
ranking, sharing no code with the join-based engine.  The variant wrappers
expose the ablated mining configurations; ``opr_all_rules`` generates every
prefix-extension rule with no confidence filter.
"""

from __future__ import annotations

from itertools import permutations
from typing import Sequence

import numpy as np

from .core import Pattern, enumerate_extensions, prefix_pattern
from .matching import naive_support
from .miner import (
    MinerConfig,
    MiningResult,
    MiningStats,
    OpRule,
    PatternOccurrences,
    _mine,
)

BRUTE_FORCE_MAX_LEN = 7  # 5040 permutations; keeps the oracle desk-scale

__all__ = [
    "naive_support",
    "enumerate_extensions",
    "mat_based_miner",
    "efo_variant_miner",
    "opr_all_rules",
    "brute_force_frequent",
]


def mat_based_miner(t: Sequence[float], cfg: MinerConfig) -> MiningResult:
    """Fusion candidate generation, but every support recomputed by rescan."""
    if cfg.variant != "mat_based":
        raise ValueError(f"mat_based_miner requires variant 'mat_based', got {cfg.variant!r}")
    result, _ = _mine([t], cfg)
    return result


def efo_variant_miner(t: Sequence[float], cfg: MinerConfig) -> MiningResult:
    """Ablated join-based miners: efo_enum, efo_scrn, or efo_prun."""
    if cfg.variant not in ("efo_enum", "efo_scrn", "efo_prun"):
        raise ValueError(
            f"efo_variant_miner requires an ablation variant, got {cfg.variant!r}"
        )
    result, _ = _mine([t], cfg)
    return result


def opr_all_rules(result: MiningResult) -> list[OpRule]:
    """Every rule x -> y over the frequent set with x = prefix_pattern(y).

    No confidence filter is applied; the strong-rule miner's output is
    exactly this list filtered by confidence >= minconf.
    """
    rules: list[OpRule] = []
    supports = result.supports()
    for y in supports:
        if len(y) < 3:
            continue
        x = prefix_pattern(y)
        if x in supports:
            rules.append(OpRule(x, y, supports[x], supports[y]))
    return rules


def _window_patterns(values: np.ndarray, m: int) -> list[Pattern | None]:
    """Rank pattern of every length-m window (index i = end position i+m).

    Tied windows yield None.  Vectorized so the oracle stays fast enough for
    large randomized corpora.
    """
    n = values.shape[0]
    if n < m:
        return []
    windows = np.lib.stride_tricks.sliding_window_view(values, m)
    order = np.argsort(windows, axis=1, kind="stable")
    sorted_vals = np.take_along_axis(windows, order, axis=1)
    tied = (np.diff(sorted_vals, axis=1) == 0).any(axis=1)
    ranks = np.empty_like(order)
    np.put_along_axis(ranks, order, np.arange(1, m + 1)[None, :], axis=1)
    out: list[Pattern | None] = []
    for row, is_tied in zip(ranks, tied):
        out.append(None if is_tied else tuple(int(x) for x in row))
    return out


def brute_force_frequent(t: Sequence[float], minsup: int, maxlen: int) -> MiningResult:
    """Exhaustive oracle: every permutation of lengths 2..maxlen, supports by
    window ranking.  Intended for maxlen <= 7 only."""
    if maxlen < 2:
        raise ValueError(f"maxlen must be >= 2, got {maxlen}")
    if maxlen > BRUTE_FORCE_MAX_LEN:
        raise ValueError(f"maxlen capped at {BRUTE_FORCE_MAX_LEN}, got {maxlen}")
    values = np.asarray(t, dtype=float)
    stats = MiningStats()
    frequent: dict[Pattern, PatternOccurrences] = {}
    for m in range(2, maxlen + 1):
        codes = _window_patterns(values, m)
        ends_by_pattern: dict[Pattern, list[int]] = {}
        for idx, code in enumerate(codes):
            if code is not None:
                ends_by_pattern.setdefault(code, []).append(idx + m)
        for perm in permutations(range(1, m + 1)):
            stats.candidates_checked += 1
            ends = ends_by_pattern.get(perm, [])
            if len(ends) >= minsup:
                frequent[perm] = PatternOccurrences(len(ends), (tuple(ends),))
    return MiningResult(frequent, stats, minsup, 1)
