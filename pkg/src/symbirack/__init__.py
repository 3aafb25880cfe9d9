"""Finite involutory virtual biracks and their link invariants.

The package models a finite set {1..n} with three binary operations
(under, over, virtual) satisfying the involutory virtual birack axioms,
plus the layer built on top: good involutions, semiarc labelings of
virtual link diagrams, the integral counting invariant Phi_Z, and its
symmetric enhancement Phi_rho.
"""

from .algebra import (
    AXIOM_FAMILIES,
    AxiomReport,
    BirackTable,
    Permutation,
    Violation,
    alexander_bikei,
    characteristic,
    check_axioms,
    constant_action,
    core_quandle,
    enumerate_good_involutions,
    enumerate_involutions,
    format_birack_matrix,
    is_good_involution,
    is_homomorphism,
    kink_map,
    parse_birack_matrix,
    trivial_birack,
)
from .census import (
    CensusRecord,
    DistinguishingPair,
    are_isomorphic,
    census_record,
    census_records,
    distinct_up_to_isomorphism,
    enumerate_biracks,
    find_distinguishing_pairs,
    write_census,
)
from .diagram import (
    Crossing,
    Diagram,
    NEGATIVE,
    POSITIVE,
    VIRTUAL,
    add_positive_kink,
    builtin_diagram,
    builtin_diagrams,
    components,
    format_diagram,
    parse_diagram,
    self_writhe,
)
from .invariants import (
    FramingVector,
    InvariantPolynomial,
    RhoPartition,
    TileEntry,
    counting_invariant,
    format_framing,
    format_polynomial,
    framing_tile,
    rho_classes,
    symmetric_enhancement,
    tile_contributions,
)
from .labeling import (
    DEFAULT_BRUTE_FORCE_CAP,
    Labeling,
    brute_force_labelings,
    enumerate_labelings,
    labeling_count,
)

__version__ = "0.1.0"

__all__ = [
    "AXIOM_FAMILIES",
    "AxiomReport",
    "BirackTable",
    "CensusRecord",
    "Crossing",
    "DEFAULT_BRUTE_FORCE_CAP",
    "Diagram",
    "DistinguishingPair",
    "FramingVector",
    "InvariantPolynomial",
    "Labeling",
    "NEGATIVE",
    "POSITIVE",
    "Permutation",
    "RhoPartition",
    "TileEntry",
    "VIRTUAL",
    "Violation",
    "add_positive_kink",
    "alexander_bikei",
    "are_isomorphic",
    "brute_force_labelings",
    "builtin_diagram",
    "builtin_diagrams",
    "census_record",
    "census_records",
    "characteristic",
    "check_axioms",
    "components",
    "constant_action",
    "core_quandle",
    "counting_invariant",
    "distinct_up_to_isomorphism",
    "enumerate_biracks",
    "enumerate_good_involutions",
    "enumerate_involutions",
    "enumerate_labelings",
    "find_distinguishing_pairs",
    "format_birack_matrix",
    "format_diagram",
    "format_framing",
    "format_polynomial",
    "framing_tile",
    "is_good_involution",
    "is_homomorphism",
    "kink_map",
    "labeling_count",
    "parse_birack_matrix",
    "parse_diagram",
    "rho_classes",
    "self_writhe",
    "symmetric_enhancement",
    "tile_contributions",
    "trivial_birack",
    "write_census",
]
