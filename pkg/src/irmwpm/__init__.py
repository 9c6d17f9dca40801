"""Surface-code decoding over depolarizing noise with iteratively
reweighted minimum-weight perfect matching."""

from .lattice import (Code, CodeKind, Side, build_hole, build_hole_with_distance,
                      build_mixed_boundary, code_metrics)
from .pauli import PauliOperator, Syndrome, commutes, compose, syndrome, weight
from .noise import NoiseModel, sample, trial_rng
from .matching import MatchGraph, Matching, brute_force_mwpm, solve_mwpm
from .decoder import (CorrectionPattern, DecodeOutcome, SyndromeGraph, Variant,
                      WeightedLattice, WeightLedger, build_syndrome_graph,
                      correction_from_matching, decode, decode_all, ledger_check,
                      reweight, shortest_paths, unit_lattice)
from .logical import check_success

__all__ = [
    "Code", "CodeKind", "Side", "build_hole", "build_hole_with_distance",
    "build_mixed_boundary", "code_metrics",
    "PauliOperator", "Syndrome", "commutes", "compose", "syndrome", "weight",
    "NoiseModel", "sample", "trial_rng",
    "MatchGraph", "Matching", "brute_force_mwpm", "solve_mwpm",
    "CorrectionPattern", "DecodeOutcome", "SyndromeGraph", "Variant",
    "WeightedLattice", "WeightLedger", "build_syndrome_graph",
    "correction_from_matching", "decode", "decode_all", "ledger_check",
    "reweight", "shortest_paths", "unit_lattice",
    "check_success",
]
