"""Increasing-chord tests for polygonal chains and length bounds in R^d."""

from .bounds import (c_d, dimension_bound, eq1_bound, f_profile, optimize_alpha,
                     parallelotope_check, reuleaux_midpoint_distance, verify_column_bounds)
from .bucketed import check_bucketed, plan_buckets
from .chain import PolygonalChain, chain_metrics, parse_chain, serialize_chain
from .checker import HalfspaceQuery, check_naive, extremal_queries
from .geometry import signed_offset, unit_direction
from .index import IndexKind, build_index, query_empty
from .oracle import chord_oracle, is_monotone, sample_chain

__all__ = [
    "HalfspaceQuery", "IndexKind", "PolygonalChain", "build_index", "c_d", "chain_metrics",
    "check_bucketed", "check_naive", "chord_oracle", "dimension_bound", "eq1_bound",
    "extremal_queries", "f_profile", "is_monotone", "optimize_alpha", "parallelotope_check",
    "parse_chain", "plan_buckets", "query_empty", "reuleaux_midpoint_distance", "sample_chain",
    "serialize_chain", "signed_offset", "unit_direction", "verify_column_bounds",
]
