"""Exact invariants and tangent-bundle stability of the two-orbit Fano catalog."""

from .rootsys import (
    DynkinType,
    Root,
    RootSystem,
    SimpleFactor,
    UnsupportedTypeError,
    Weight,
    build_root_system,
    coroot_pairing,
    rho,
    root_to_weight,
    weyl_dim,
)
from .flagvar import (
    FlagInvariants,
    ParabolicMarking,
    anticanonical_weight,
    fano_index,
    flag_dimension,
    flag_invariants,
)
from .pasquier import (
    Family,
    FoliationInvariants,
    StabilityReport,
    TripleSpec,
    VarietyInvariants,
    Verdict,
    ambient_dimension,
    enumerate_triples,
    foliation_invariants,
    parse_triple_id,
    report_record,
    stability_verdict,
    variety_invariants,
)

__all__ = [
    "DynkinType", "Root", "RootSystem", "SimpleFactor", "UnsupportedTypeError", "Weight",
    "build_root_system", "coroot_pairing", "rho", "root_to_weight", "weyl_dim",
    "FlagInvariants", "ParabolicMarking", "anticanonical_weight", "fano_index",
    "flag_dimension", "flag_invariants",
    "Family", "FoliationInvariants", "StabilityReport", "TripleSpec",
    "VarietyInvariants", "Verdict", "ambient_dimension", "enumerate_triples",
    "foliation_invariants", "parse_triple_id", "report_record", "stability_verdict",
    "variety_invariants",
]

__version__ = "0.1.0"
