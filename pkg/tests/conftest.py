"""Shared fixtures: the worked-example series and its oracle-verified facts.

Every constant below was computed (and is re-derived in the acceptance suite)
by exhaustive window ranking, independent of the join-based miner.
"""

import pytest

# 16-point sales-style series used throughout the golden tests
GOLDEN = (24, 31, 27, 33, 30, 24, 21, 25, 23, 26, 22, 27, 24, 28, 23, 29)

GOLDEN_L12 = (2, 4, 8, 10, 12, 14, 16)
GOLDEN_L21 = (3, 5, 6, 7, 9, 11, 13, 15)

# frequent set at minsup = 3, support and end positions per pattern
GOLDEN_F = {
    (1, 2): 7,
    (2, 1): 8,
    (1, 3, 2): 4,
    (2, 1, 3): 6,
    (1, 3, 2, 4): 3,
    (3, 1, 4, 2): 3,
}
GOLDEN_ENDS = {
    (1, 2): GOLDEN_L12,
    (2, 1): GOLDEN_L21,
    (1, 3, 2): (3, 5, 9, 13),
    (2, 1, 3): (4, 8, 10, 12, 14, 16),
    (1, 3, 2, 4): (4, 10, 14),
    (3, 1, 4, 2): (5, 9, 13),
}

# every prefix-extension rule over GOLDEN_F: (antecedent, consequent, sup_x, sup_y)
GOLDEN_ALL_RULES = {
    ((1, 2), (1, 3, 2), 7, 4),
    ((2, 1), (2, 1, 3), 8, 6),
    ((1, 3, 2), (1, 3, 2, 4), 4, 3),
    ((2, 1, 3), (3, 1, 4, 2), 6, 3),
}
# the subset with confidence >= 0.7
GOLDEN_STRONG_RULES = {
    ((2, 1), (2, 1, 3), 8, 6),
    ((1, 3, 2), (1, 3, 2, 4), 4, 3),
}


@pytest.fixture
def golden():
    return GOLDEN
