"""Combinatorics of mod p representations of GL2 over unramified extensions.

Serre weights and torus characters, the tuple sets that index weights and
principal-series constituents, subrepresentation profiles over a finite
field, and characteristic cycles of monomial modules.
"""

from .charcycle import (
    CycleVector,
    MinimalPrime,
    Monomial,
    MonomialIdeal,
    ModuleSpec,
    char_cycle,
    minimal_primes,
    mult_at_prime,
    p0,
    profile_p0_multiplicity,
)
from .diagram import (
    HypothesisProfile,
    WeightSet,
    hypothesis_profile,
    jh_meets_weightset,
    jh_principal_series,
    serre_weights,
)
from .errors import (
    Gl2ModpError,
    InvariantError,
    NegativeCoefficientError,
    ParityError,
    PreconditionError,
    ValidationError,
)
from .lattice import (
    Subspace,
    SubrepProfile,
    length_bound,
    max_chain_check,
    ps_decomposition,
    quotient_profile,
    soc_length,
)
from .tuples import (
    AffineForm,
    AffineTuple,
    e_twist,
    enumerate_D,
    enumerate_P_ind,
    j_set,
    length,
    principal_series_tuples,
    weight_of_tuple,
    weight_set_tuples,
)
from .weights import (
    IRREDUCIBLE,
    REDUCIBLE,
    InertialData,
    Params,
    Result,
    SerreWeight,
    ToralCharacter,
    char_of_weight,
    conj_s,
    is_inertial_generic,
    is_weight_generic,
    make_character,
    make_params,
    make_weight,
    required_genericity,
    weight_s,
)

__version__ = "0.1.0"

__all__ = [
    "AffineForm",
    "AffineTuple",
    "CycleVector",
    "Gl2ModpError",
    "HypothesisProfile",
    "IRREDUCIBLE",
    "InertialData",
    "InvariantError",
    "MinimalPrime",
    "ModuleSpec",
    "Monomial",
    "MonomialIdeal",
    "NegativeCoefficientError",
    "Params",
    "ParityError",
    "PreconditionError",
    "REDUCIBLE",
    "Result",
    "SerreWeight",
    "SubrepProfile",
    "Subspace",
    "ToralCharacter",
    "ValidationError",
    "WeightSet",
    "char_cycle",
    "char_of_weight",
    "conj_s",
    "e_twist",
    "enumerate_D",
    "enumerate_P_ind",
    "hypothesis_profile",
    "is_inertial_generic",
    "is_weight_generic",
    "j_set",
    "jh_meets_weightset",
    "jh_principal_series",
    "length",
    "length_bound",
    "make_character",
    "make_params",
    "make_weight",
    "max_chain_check",
    "minimal_primes",
    "mult_at_prime",
    "p0",
    "principal_series_tuples",
    "profile_p0_multiplicity",
    "ps_decomposition",
    "quotient_profile",
    "required_genericity",
    "serre_weights",
    "soc_length",
    "weight_of_tuple",
    "weight_s",
    "weight_set_tuples",
]
