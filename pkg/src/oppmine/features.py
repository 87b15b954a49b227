"""Feature extraction from mined patterns and clustering evaluation metrics.

Sequences are summarized by the supports of a selected pattern set, either
the patterns appearing in strong rules or the top-k patterns by support.
Feature values are raw occurrence counts, not normalized.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import LengthMismatch, Pattern
from .matching import naive_support
from .miner import MiningResult, OpRule

log = logging.getLogger(__name__)


class TooFewRows(ValueError):
    """k-means was asked for more clusters than there are rows."""


@dataclass
class FeatureMatrix:
    """One row per sequence, one column per pattern, cell = support count."""

    values: np.ndarray
    column_patterns: list[Pattern]
    row_labels: list[str] | None = None

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values)
        if self.values.ndim != 2:
            raise ValueError("feature matrix must be 2-dimensional")
        if self.values.shape[1] != len(self.column_patterns):
            raise ValueError("column count does not match pattern list")
        if self.row_labels is not None and len(self.row_labels) != self.values.shape[0]:
            raise ValueError("row label count does not match row count")


def rule_patterns(rules: Sequence[OpRule]) -> list[Pattern]:
    """Distinct antecedents and consequents, in first-appearance order."""
    seen: dict[Pattern, None] = {}
    for rule in rules:
        seen.setdefault(rule.antecedent)
        seen.setdefault(rule.consequent)
    return list(seen)


def top_k_patterns(result: MiningResult, k: int) -> list[Pattern]:
    """The k frequent patterns of highest support.

    Ties break toward shorter patterns, then lexicographically smaller rank
    lists.  Asking for more patterns than exist returns them all and logs a
    warning.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ranked = sorted(result.supports().items(), key=lambda kv: (-kv[1], len(kv[0]), kv[0]))
    if k > len(ranked):
        log.warning("top_k_patterns: k=%d exceeds %d frequent patterns", k, len(ranked))
    return [p for p, _ in ranked[:k]]


def feature_matrix(
    dataset: Sequence[Sequence[float]],
    patterns: Sequence[Pattern],
    row_labels: Sequence[str] | None = None,
) -> FeatureMatrix:
    """Support of each pattern in each sequence, by direct window ranking."""
    if not patterns:
        raise ValueError("patterns must be non-empty")
    cells = np.array(
        [[len(naive_support(p, seq)) for p in patterns] for seq in dataset],
        dtype=np.int64,
    ).reshape(len(dataset), len(patterns))
    labels = list(row_labels) if row_labels is not None else None
    return FeatureMatrix(cells, list(patterns), labels)


def kmeans(
    m: FeatureMatrix | np.ndarray,
    k: int,
    seed: int = 0,
    max_iters: int = 100,
) -> np.ndarray:
    """Lloyd's iteration over Euclidean distance on the raw counts.

    Deterministic given the seed: initial centroids are the first k distinct
    rows in seed-shuffled order, equidistant points go to the lowest centroid
    index, and an emptied cluster keeps its previous centroid.
    """
    data = np.asarray(m.values if isinstance(m, FeatureMatrix) else m, dtype=float)
    n_rows = data.shape[0]
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if n_rows < k:
        raise TooFewRows(f"{n_rows} rows < k={k}")
    rng = np.random.default_rng(seed)
    centroids: list[np.ndarray] = []
    seen: set[tuple[float, ...]] = set()
    for idx in rng.permutation(n_rows):
        key = tuple(data[idx])
        if key not in seen:
            seen.add(key)
            centroids.append(data[idx])
            if len(centroids) == k:
                break
    while len(centroids) < k:  # fewer distinct rows than clusters
        centroids.append(centroids[-1].copy())
    centers = np.stack(centroids)
    assignments = np.full(n_rows, -1, dtype=np.int64)
    for _ in range(max_iters):
        dists = np.linalg.norm(data[:, None, :] - centers[None, :, :], axis=2)
        new_assignments = np.argmin(dists, axis=1)
        if np.array_equal(new_assignments, assignments):
            break
        assignments = new_assignments
        for c in range(k):
            members = data[assignments == c]
            if len(members):
                centers[c] = members.mean(axis=0)
    return assignments


def _contingency(x: Sequence[int], y: Sequence[int]) -> np.ndarray:
    xa = np.asarray(x)
    ya = np.asarray(y)
    if xa.shape != ya.shape or xa.ndim != 1:
        raise LengthMismatch(f"labelings differ in shape: {xa.shape} vs {ya.shape}")
    if xa.size == 0:
        raise ValueError("labelings must be non-empty")
    _, xi = np.unique(xa, return_inverse=True)
    _, yi = np.unique(ya, return_inverse=True)
    table = np.zeros((xi.max() + 1, yi.max() + 1), dtype=np.int64)
    np.add.at(table, (xi, yi), 1)
    return table


def _entropy(p: np.ndarray) -> float:
    p = p[p > 0]
    return float(-(p * np.log(p)).sum())


def nmi(x: Sequence[int], y: Sequence[int]) -> float:
    """Normalized mutual information between two labelings, in [0, 1].

    Mutual information over the empirical joint distribution, normalized by
    the geometric mean of the two label entropies (natural log; 0 log 0 = 0).
    Returns 0.0 when either labeling has a single class.
    """
    table = _contingency(x, y)
    n = table.sum()
    pxy = table / n
    px = pxy.sum(axis=1)
    py = pxy.sum(axis=0)
    hx = _entropy(px)
    hy = _entropy(py)
    if hx == 0.0 or hy == 0.0:
        return 0.0
    mask = pxy > 0
    outer = np.outer(px, py)
    mi = float((pxy[mask] * np.log(pxy[mask] / outer[mask])).sum())
    return min(1.0, max(0.0, mi / math.sqrt(hx * hy)))


def homogeneity(x: Sequence[int], y: Sequence[int]) -> float:
    """1 - H(truth | clusters) / H(truth), in [0, 1].

    x is the ground truth, y the cluster assignment.  Returns 1.0 when the
    truth has a single class (zero entropy).
    """
    table = _contingency(x, y)
    n = table.sum()
    pxy = table / n
    px = pxy.sum(axis=1)
    py = pxy.sum(axis=0)
    hx = _entropy(px)
    if hx == 0.0:
        return 1.0
    mask = pxy > 0
    cond = pxy / py[None, :]
    h_x_given_y = float(-(pxy[mask] * np.log(cond[mask])).sum())
    return min(1.0, max(0.0, 1.0 - h_x_given_y / hx))
