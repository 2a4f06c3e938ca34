"""Congruence preserving functions Z/nZ -> Z/mZ.

A function table is congruence preserving (CP) when every divisor d of m
carries congruent arguments to congruent values.  This package represents
such functions in the binomial (Newton) basis, decides the CP property
both directly and through the coefficient criterion "lcm(k) divides a_k
in Z/mZ", produces the lcm(k)*P_k generator family, and counts CP
functions by several mutually verifiable formulas.
"""

from .errors import BudgetExceededError
from .kernels import BACKEND
from .modring import (
    Modulus,
    Residue,
    canonical_associate,
    divides_in_ring,
    factorize,
    ilog,
    mu,
    mu_prime,
    multiples_of,
    primes_upto,
    subgroup_order,
    unary_lcm,
    unary_lcm_mod,
)
from .newton import (
    FunctionTable,
    NewtonCoeffs,
    binomial_mod,
    decompose,
    decompose_matrix,
    evaluate,
    evaluate_table,
    newton_degree,
)
from .cpcheck import (
    CoeffWitness,
    CongruencePair,
    CpReport,
    DirectWitness,
    enumerate_cp,
    generator_family,
    is_basis,
    is_cp_coeff,
    is_cp_direct,
    random_cp,
    random_cp_many,
    reduced_pairs,
)
from .cpcount import (
    cp_count,
    cp_count_bhargava,
    cp_count_closed,
    cp_count_exhaustive,
    cp_count_product,
)
from .rng import SplitMix64

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BudgetExceededError",
    "CoeffWitness",
    "CongruencePair",
    "CpReport",
    "DirectWitness",
    "FunctionTable",
    "Modulus",
    "NewtonCoeffs",
    "Residue",
    "SplitMix64",
    "binomial_mod",
    "canonical_associate",
    "cp_count",
    "cp_count_bhargava",
    "cp_count_closed",
    "cp_count_exhaustive",
    "cp_count_product",
    "decompose",
    "decompose_matrix",
    "divides_in_ring",
    "enumerate_cp",
    "evaluate",
    "evaluate_table",
    "factorize",
    "generator_family",
    "ilog",
    "is_basis",
    "is_cp_coeff",
    "is_cp_direct",
    "mu",
    "mu_prime",
    "multiples_of",
    "newton_degree",
    "primes_upto",
    "random_cp",
    "random_cp_many",
    "reduced_pairs",
    "subgroup_order",
    "unary_lcm",
    "unary_lcm_mod",
]
