"""Explicit Hamiltonian cycles in Kneser graphs K(n, k) for n >= 4k."""
from .baranyai import baranyai_partition, compute_size_plan, custom_plan
from .graycode import gray_code, verify_graycode
from .hamilton import build_hamiltonian, construct
from .model import HamCycle, MatchingPartition, PlanPath, SizePlan
from .subsets import (
    GroundParams,
    InvariantViolation,
    OutOfRangeError,
    Subset,
    UsageError,
    all_k_subsets,
    diff_size,
    is_disjoint,
    rank_colex,
    unrank_colex,
)
from .verify import brute_force_partition_oracle, verify_cycle, verify_partition, verify_tour

__version__ = "0.1.0"
