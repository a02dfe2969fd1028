"""Exact coprime Ramsey thresholds with verifiable certificates."""

from .thresholds import (
    ClassicalTable,
    Demands,
    RamseyBound,
    UnknownClassicalValueError,
    demands,
    r_cop,
    r_cop_covering,
    r_cop_edge,
    rank_trigger,
    trigger_threshold,
)
from .certificates import (
    BinPartition,
    ColoringWitness,
    ForcingClique,
    build_prime_bin_coloring,
    canonical_bins,
    nu_packing,
    pigeonhole_refute,
    verify_divisor_certificate,
)
from .graph import clique_number, enumerate_coprime_cliques, interval_graph

__all__ = [
    "BinPartition",
    "ClassicalTable",
    "ColoringWitness",
    "Demands",
    "ForcingClique",
    "RamseyBound",
    "UnknownClassicalValueError",
    "build_prime_bin_coloring",
    "canonical_bins",
    "clique_number",
    "demands",
    "enumerate_coprime_cliques",
    "interval_graph",
    "nu_packing",
    "pigeonhole_refute",
    "r_cop",
    "r_cop_covering",
    "r_cop_edge",
    "rank_trigger",
    "trigger_threshold",
    "verify_divisor_certificate",
]
