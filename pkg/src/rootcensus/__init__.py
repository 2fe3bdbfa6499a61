"""Exact census library for root counts of polynomials over Z_n and for
unlucky evaluation points of polynomial pairs over finite fields."""

__version__ = "0.1.0"

from .census import (
    BudgetExceededError,
    CensusConfig,
    CensusResult,
    binomial_reference,
    fq_pair_census,
    mv_census,
    unlucky_sim,
    zn_root_census,
)
from .incexc import BTVectors, SetSystem, b_direct, b_from_t, moment_check, t_vector
from .multipoly import MPoly, ShapedMultiPoly
from .numtheory import a006579, divisors, gcd_int, is_prime, is_prime_power, theory_var_zn, totient
from .rings import Ring, RingSpec, field_make, ring_make
from .resultants import resultant_det, resultant_poly, resultant_specialized, sylvester_matrix
from .unipoly import UniPoly, count_distinct_roots_zn, resultant_uni, uni_divmod, uni_gcd

__all__ = [
    "BTVectors",
    "BudgetExceededError",
    "CensusConfig",
    "CensusResult",
    "MPoly",
    "Ring",
    "RingSpec",
    "SetSystem",
    "ShapedMultiPoly",
    "UniPoly",
    "a006579",
    "b_direct",
    "b_from_t",
    "binomial_reference",
    "count_distinct_roots_zn",
    "divisors",
    "field_make",
    "fq_pair_census",
    "gcd_int",
    "is_prime",
    "is_prime_power",
    "moment_check",
    "mv_census",
    "resultant_det",
    "resultant_poly",
    "resultant_specialized",
    "resultant_uni",
    "ring_make",
    "sylvester_matrix",
    "t_vector",
    "theory_var_zn",
    "totient",
    "uni_divmod",
    "uni_gcd",
    "unlucky_sim",
    "zn_root_census",
]
