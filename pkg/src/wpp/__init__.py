"""Power sequences, coefficient sequences, the map phi between them, and the
weighted graded-commutative algebras they define on polyhedral products."""

from .complex import (SimplicialComplex, boundary, closure, from_maximal_faces, full_simplex,
                      full_subcomplex, simplex)
from .sequences import (CoefficientRing, CoefficientSequence, PowerSequence, Q, SequenceError,
                        Violation, ViolationError, Z, all_faces, coefficient_sequence_from_rule,
                        generator_c, generator_d, generator_frak_c, generator_frak_d,
                        minimal_power_sequence, monoid_mul, normalize, ones_power_sequence, phi,
                        phi_extended, random_power_sequence, validate_coefficient_sequence,
                        validate_power_sequence)
from .lattice import (ExponentVector, check_mobius_decomposition, from_exponent_vector,
                      lattice_rank, to_exponent_vector)
from .search import SearchResult, enumerate_phi_image, phi_preimage_search
from .algebra import (AlgebraElement, GeneratorSpec, SphereAlgebra, WeightedAlgebra, eta_star,
                      include_full_subcomplex, make_algebra, poincare_series, restrict,
                      sphere_algebra, structure_constants_match)
from .oracle import (OracleReport, exhaustive_check, ordinary_star_algebra, splitting_series)

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex",
    "boundary",
    "closure",
    "from_maximal_faces",
    "full_simplex",
    "full_subcomplex",
    "simplex",
    "CoefficientRing",
    "CoefficientSequence",
    "PowerSequence",
    "Q",
    "SequenceError",
    "Violation",
    "ViolationError",
    "Z",
    "all_faces",
    "coefficient_sequence_from_rule",
    "generator_c",
    "generator_d",
    "generator_frak_c",
    "generator_frak_d",
    "minimal_power_sequence",
    "monoid_mul",
    "normalize",
    "ones_power_sequence",
    "phi",
    "phi_extended",
    "random_power_sequence",
    "validate_coefficient_sequence",
    "validate_power_sequence",
    "ExponentVector",
    "check_mobius_decomposition",
    "from_exponent_vector",
    "lattice_rank",
    "to_exponent_vector",
    "SearchResult",
    "enumerate_phi_image",
    "phi_preimage_search",
    "AlgebraElement",
    "GeneratorSpec",
    "SphereAlgebra",
    "WeightedAlgebra",
    "eta_star",
    "include_full_subcomplex",
    "make_algebra",
    "poincare_series",
    "restrict",
    "sphere_algebra",
    "structure_constants_match",
    "OracleReport",
    "exhaustive_check",
    "ordinary_star_algebra",
    "splitting_series",
]
