"""Pattern algebra and occurrence-join primitives for order-preserving mining.

An order-preserving pattern (OPP) is a permutation of 1..m encoding the
relative order, i.e. the trend shape, of m consecutive series values: entry i
is the rank of the i-th value among the m values of the window (1 = smallest).
A window containing any duplicate values has no strict relative order and
matches no pattern.

Positions are 1-based in every public contract: a window of length m ending
at position e covers values t_{e-m+1} .. t_e, and occurrence lists hold end
positions e with m <= e <= n.
"""

from __future__ import annotations

from typing import Sequence

Pattern = tuple[int, ...]
Ends = tuple[int, ...]


class EmptyWindow(ValueError):
    """A relative order was requested for an empty window."""


class PatternTooShort(ValueError):
    """Prefix/suffix extraction needs a pattern of length >= 2."""


class LengthMismatch(ValueError):
    """Two patterns (or label vectors) that must have equal length do not."""


class NotFusable(ValueError):
    """fuse() was called on a pair that fails the suffix/prefix agreement."""


def relative_order(window: Sequence[float]) -> Pattern | None:
    """Rank permutation of a window, or None when any two values are equal.

    Value comparison is exact; no epsilon is applied.
    """
    m = len(window)
    if m == 0:
        raise EmptyWindow("cannot rank an empty window")
    order = sorted(range(m), key=window.__getitem__)
    ranks = [0] * m
    prev = None
    for k, idx in enumerate(order):
        v = window[idx]
        if prev is not None and v == prev:
            return None
        prev = v
        ranks[idx] = k + 1
    return tuple(ranks)


def is_permutation(p: Pattern) -> bool:
    return len(p) >= 1 and sorted(p) == list(range(1, len(p) + 1))


def prefix_pattern(p: Pattern) -> Pattern:
    """Relative order of the first m-1 ranks, renormalized to 1..m-1."""
    if len(p) < 2:
        raise PatternTooShort(f"no prefix pattern for {p!r}")
    result = relative_order(p[:-1])
    assert result is not None  # ranks are distinct integers
    return result


def suffix_pattern(p: Pattern) -> Pattern:
    """Relative order of the last m-1 ranks, renormalized to 1..m-1."""
    if len(p) < 2:
        raise PatternTooShort(f"no suffix pattern for {p!r}")
    result = relative_order(p[1:])
    assert result is not None
    return result


def can_fuse(p: Pattern, q: Pattern) -> bool:
    """True iff the suffix relative order of p equals the prefix one of q."""
    if len(p) != len(q):
        raise LengthMismatch(f"patterns differ in length: {p!r} vs {q!r}")
    return suffix_pattern(p) == prefix_pattern(q)


def _with_leading_rank(q: Pattern, v: int) -> Pattern:
    # Prepend an element whose rank among all len(q)+1 values is v; existing
    # ranks >= v shift up by one.
    return (v,) + tuple(x if x < v else x + 1 for x in q)


def fuse(p: Pattern, q: Pattern) -> tuple[Pattern, Pattern | None]:
    """Fuse two equal-length patterns into their length-(m+1) super-pattern(s).

    The output r satisfies prefix_pattern(r) == p and suffix_pattern(r) == q.
    When p[0] != q[-1] the relation between the super-window's first and last
    values is forced and one pattern results (second slot is None).  When
    p[0] == q[-1] that relation is undetermined and both orientations are
    returned: r with first < last, h with first > last.
    """
    if not can_fuse(p, q):
        raise NotFusable(f"cannot fuse {p!r} with {q!r}")
    first = p[0]
    last = q[-1]
    if first != last:
        # first < last forces the leading rank to stay at p[0]; first > last
        # bumps it by the one new smaller element appended at the end.
        v = first if first < last else first + 1
        return _with_leading_rank(q, v), None
    return _with_leading_rank(q, first), _with_leading_rank(q, first + 1)


def enumerate_extensions(p: Pattern) -> list[Pattern]:
    """All len(p)+1 patterns whose first-len(p) relative order equals p.

    Appending rank v shifts existing ranks >= v up by one.  Output is sorted
    lexicographically.
    """
    m = len(p)
    out = [tuple(x if x < v else x + 1 for x in p) + (v,) for v in range(1, m + 2)]
    out.sort()
    return out


ASCENT: Pattern = (1, 2)
DESCENT: Pattern = (2, 1)


def scan_length2(values: Sequence[float]) -> tuple[Ends, Ends]:
    """End positions of (1,2) and (2,1) occurrences; equal pairs match neither."""
    up: list[int] = []
    down: list[int] = []
    for e in range(2, len(values) + 1):
        a, b = values[e - 2], values[e - 1]
        if a < b:
            up.append(e)
        elif a > b:
            down.append(e)
    return tuple(up), tuple(down)


def spf_join(
    p: Pattern,
    prefix_ends: Sequence[int],
    q: Pattern,
    suffix_ends: Sequence[int],
    values: Sequence[float],
    *,
    screening: bool = False,
    stats=None,
) -> tuple[Ends, Ends, Ends, Ends]:
    """Join the occurrence end-lists of p and q into those of fuse(p, q).

    A pair (lp, lq) with lq == lp + 1 marks a super-window ending at lq.  If
    p[0] != q[-1] it is an occurrence of r.  Otherwise the window's first and
    last values decide: strictly less -> r, strictly greater -> h, equal ->
    neither (the window is tied and matches nothing).

    With screening=True, every lp and lq that produced an occurrence is
    dropped from the returned working lists (an end position belongs to
    exactly one super-pattern, so it can never produce another); equal-value
    pairs are kept.  With screening=False the inputs are returned unchanged.

    Both end-lists must be strictly increasing.  The walk is a sorted merge;
    each pointer-pair probe increments ``stats.element_comparisons`` when a
    stats object is supplied.

    Returns (ends of r, ends of h, remaining prefix_ends, remaining
    suffix_ends).
    """
    if len(p) != len(q):
        raise LengthMismatch(f"patterns differ in length: {p!r} vs {q!r}")
    m = len(p)
    tie_split = p[0] == q[-1]
    ends_r: list[int] = []
    ends_h: list[int] = []
    used_p: set[int] = set()
    used_q: set[int] = set()
    i = j = 0
    probes = 0
    while i < len(prefix_ends) and j < len(suffix_ends):
        probes += 1
        lp = prefix_ends[i]
        lq = suffix_ends[j]
        if lq == lp + 1:
            if not tie_split:
                ends_r.append(lq)
                used_p.add(lp)
                used_q.add(lq)
            else:
                first = values[lq - m - 1]  # window start, 1-based lq - m
                last = values[lq - 1]
                if first < last:
                    ends_r.append(lq)
                    used_p.add(lp)
                    used_q.add(lq)
                elif first > last:
                    ends_h.append(lq)
                    used_p.add(lp)
                    used_q.add(lq)
                # equal: tied window, matches neither; keep both ends
            i += 1
            j += 1
        elif lp + 1 < lq:
            i += 1
        else:
            j += 1
    if stats is not None:
        stats.element_comparisons += probes
    if screening:
        kept_p = tuple(e for e in prefix_ends if e not in used_p)
        kept_q = tuple(e for e in suffix_ends if e not in used_q)
    else:
        kept_p = tuple(prefix_ends)
        kept_q = tuple(suffix_ends)
    return tuple(ends_r), tuple(ends_h), kept_p, kept_q
