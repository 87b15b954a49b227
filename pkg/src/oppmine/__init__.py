"""Order-preserving pattern and rule mining for numeric time series."""

from .baselines import (
    brute_force_frequent,
    efo_variant_miner,
    mat_based_miner,
    opr_all_rules,
)
from .core import (
    EmptyWindow,
    LengthMismatch,
    NotFusable,
    Pattern,
    PatternTooShort,
    can_fuse,
    enumerate_extensions,
    fuse,
    prefix_pattern,
    relative_order,
    scan_length2,
    spf_join,
    suffix_pattern,
)
from .features import (
    FeatureMatrix,
    TooFewRows,
    feature_matrix,
    homogeneity,
    kmeans,
    nmi,
    rule_patterns,
    top_k_patterns,
)
from .matching import naive_support
from .miner import (
    MinerConfig,
    MiningResult,
    MiningStats,
    OpRule,
    PatternOccurrences,
    efo_miner,
    mine_dataset,
    opr_mine_dataset,
    opr_miner,
)

__version__ = "0.1.0"

__all__ = [
    "EmptyWindow",
    "FeatureMatrix",
    "LengthMismatch",
    "MinerConfig",
    "MiningResult",
    "MiningStats",
    "NotFusable",
    "OpRule",
    "Pattern",
    "PatternOccurrences",
    "PatternTooShort",
    "TooFewRows",
    "brute_force_frequent",
    "can_fuse",
    "efo_miner",
    "efo_variant_miner",
    "enumerate_extensions",
    "feature_matrix",
    "fuse",
    "homogeneity",
    "kmeans",
    "mat_based_miner",
    "mine_dataset",
    "naive_support",
    "nmi",
    "opr_all_rules",
    "opr_mine_dataset",
    "opr_miner",
    "prefix_pattern",
    "relative_order",
    "rule_patterns",
    "scan_length2",
    "spf_join",
    "suffix_pattern",
    "top_k_patterns",
]
