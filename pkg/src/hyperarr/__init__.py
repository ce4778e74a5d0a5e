"""Exact engine for central rational hyperplane arrangements.

Core objects: canonical integer covectors, immutable Arrangement values, a
shared intersection-lattice engine, and deciders/certifiers for
supersolvability, freeness, factoredness, chamber geometry, formality, and
generation closure, all in arbitrary-precision rational arithmetic.
"""

from .arrangement import (
    Arrangement,
    ParseError,
    boolean,
    essentialize,
    format_arrangement_text,
    from_vectors,
    hyperpolygonal,
    is_generic,
    parse_arrangement_text,
    restriction_to_hyperplane,
    triple,
    verify_linear_isomorphism,
)
from .exactlinalg import SubspaceBasis, canonicalize, rank_of
from .factorization import (
    find_nice_partition,
    is_independent_partition,
    is_inductively_factored,
    is_nice,
    poincare_block_sizes,
)
from .formality import (
    GenClosure,
    UniquenessWitness,
    gen_closure,
    is_formal,
    is_lc_basis,
    is_matroid_connected,
    line_closure,
    projective_uniqueness_witness,
    rank2_flats,
    relation_space_dim,
)
from .freeness import (
    CapExhausted,
    CertificateError,
    CertificateReplay,
    FreenessDecision,
    InductiveFreenessResult,
    chi_integer_roots,
    decide_freeness,
    is_inductively_free,
    verify_free_certificate,
)
from .lattice import (
    Flat,
    IntersectionLattice,
    build_lattice,
    chi,
    find_generic_rank3_localization,
    is_supersolvable,
    localization,
    modular_flat_indices,
    restriction,
    zaslavsky_region_count,
)
from .regions import (
    Region,
    RegionSet,
    enumerate_regions,
    is_simplicial,
    is_simplicial_geometric,
    q_integer_product,
    region_count,
    separation,
    simplicial_defect,
    zeta_polynomial,
    zeta_product_bases,
)
from .report import (
    PropertyDecision,
    PropertyReport,
    analyze,
    matching_packaged_certificate,
    packaged_certificate,
    report,
)

__all__ = [
    "Arrangement",
    "CapExhausted",
    "CertificateError",
    "CertificateReplay",
    "Flat",
    "FreenessDecision",
    "GenClosure",
    "InductiveFreenessResult",
    "IntersectionLattice",
    "ParseError",
    "PropertyDecision",
    "PropertyReport",
    "Region",
    "RegionSet",
    "SubspaceBasis",
    "UniquenessWitness",
    "analyze",
    "boolean",
    "build_lattice",
    "canonicalize",
    "chi",
    "chi_integer_roots",
    "decide_freeness",
    "enumerate_regions",
    "essentialize",
    "find_generic_rank3_localization",
    "find_nice_partition",
    "format_arrangement_text",
    "from_vectors",
    "gen_closure",
    "hyperpolygonal",
    "is_formal",
    "is_generic",
    "is_independent_partition",
    "is_inductively_factored",
    "is_inductively_free",
    "is_lc_basis",
    "is_matroid_connected",
    "is_nice",
    "is_simplicial",
    "is_simplicial_geometric",
    "is_supersolvable",
    "line_closure",
    "localization",
    "matching_packaged_certificate",
    "modular_flat_indices",
    "packaged_certificate",
    "parse_arrangement_text",
    "poincare_block_sizes",
    "projective_uniqueness_witness",
    "q_integer_product",
    "rank_of",
    "region_count",
    "relation_space_dim",
    "report",
    "restriction",
    "restriction_to_hyperplane",
    "separation",
    "simplicial_defect",
    "triple",
    "verify_linear_isomorphism",
    "zaslavsky_region_count",
    "zeta_polynomial",
    "zeta_product_bases",
]

__version__ = "0.1.0"
