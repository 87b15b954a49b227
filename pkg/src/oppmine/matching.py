"""Direct window-ranking pattern matching.

This is the scan-based route: every window is re-ranked from scratch, with no
reuse of sub-pattern results.  It is deliberately independent of the
occurrence-join machinery in :mod:`oppmine.core` and serves both as the
support oracle and as the rescan backend of the mat-based mining variant.
"""

from __future__ import annotations

from typing import Sequence

from .core import Ends, Pattern, relative_order


def naive_support(pattern: Pattern, values: Sequence[float], *, stats=None) -> Ends:
    """End positions of all occurrences of ``pattern``, by sliding re-rank.

    Tied windows match nothing.  When ``stats`` is given, the rescan cost is
    charged to ``stats.element_comparisons`` at m*(m-1)/2 pairwise value
    comparisons per window examined.
    """
    m = len(pattern)
    n = len(values)
    ends = [e for e in range(m, n + 1) if relative_order(values[e - m:e]) == pattern]
    if stats is not None and n >= m:
        stats.element_comparisons += (n - m + 1) * (m * (m - 1) // 2)
    return tuple(ends)
