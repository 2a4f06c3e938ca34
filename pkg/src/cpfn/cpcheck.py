"""Deciding congruence preservation, two independent ways.

A function f : Z/nZ -> Z/mZ is congruence preserving (CP) when for every
divisor d of m, a = b (mod d) implies f(a) = f(b) (mod d).  The direct
test checks a reduced set of pair constraints equivalent to that
definition; the coefficient test instead decomposes f in the binomial
basis and checks that lcm(k) divides a_k in Z/mZ for every k.  The two
verdicts always agree; the test suite sweeps whole table spaces to prove
it.

This module also produces the generator family lcm(k)*P_k spanning the CP
functions, decides when that family is a basis, and enumerates or samples
CP functions from the coefficient characterization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Union

from .errors import BudgetExceededError
from .modring import (
    Modulus,
    Residue,
    ilog,
    mu,
    multiples_of,
    divides_in_ring,
    unary_lcm_mod,
)
from .newton import FunctionTable, NewtonCoeffs, binomial_mod, decompose, evaluate_table
from .rng import SplitMix64

DEFAULT_BUDGET = 10**6


class CongruencePair(NamedTuple):
    """One reduced constraint: f(a) = f(b) (mod d) with b - a = d."""

    d: int
    a: int
    b: int


class DirectWitness(NamedTuple):
    """A violated congruence: a = b (mod d) but f(a) != f(b) (mod d)."""

    d: int
    a: int
    b: int


class CoeffWitness(NamedTuple):
    """A Newton coefficient not divisible by lcm(k) in Z/mZ."""

    k: int
    coeff: int
    lcm_mod: int


@dataclass(frozen=True)
class CpReport:
    """Verdict of a CP check plus a witness when it fails."""

    verdict: bool
    method: str
    witness: Optional[Union[DirectWitness, CoeffWitness]] = None

    def __post_init__(self):
        if self.method not in ("direct", "coeff"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.verdict == (self.witness is not None):
            raise ValueError("witness must be present exactly when the verdict is False")


def reduced_pairs(n: int, mod: Modulus) -> list[CongruencePair]:
    """The reduced constraint set deciding congruence preservation.

    For each prime p^e exactly dividing m and each b in [p, n), the
    binding constraint is f(b) = f(b - d) (mod d) with d = p^min(e, c)
    and p^c the largest power of p not exceeding b.  Every divisor
    congruence follows from these by transitivity and the Chinese
    remainder theorem; the equivalence with the full-definition scan is
    property-tested exhaustively.  Sorted by (d, a).
    """
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    pairs = []
    for p, e in mod.factors:
        for b in range(p, n):
            d = p ** min(e, ilog(b, p))
            pairs.append(CongruencePair(d, b - d, b))
    pairs.sort()
    return pairs


def _least_direct_witness(f: FunctionTable) -> DirectWitness:
    # Lexicographically least (d, a, b) over all divisors of m; only
    # called once the reduced check has already refuted f.
    for d in f.mod.divisors():
        if d == 1:
            continue
        for a in range(f.n):
            for b in range(a + d, f.n, d):
                if (f.values[b] - f.values[a]) % d != 0:
                    return DirectWitness(d, a, b)
    raise AssertionError("reduced check refuted f but the full scan found no witness")


def is_cp_direct(f: FunctionTable) -> CpReport:
    """Decide congruence preservation straight from the definition."""
    values = f.values
    for d, a, b in reduced_pairs(f.n, f.mod):
        if (values[b] - values[a]) % d != 0:
            return CpReport(False, "direct", _least_direct_witness(f))
    return CpReport(True, "direct")


def is_cp_coeff(f: FunctionTable) -> CpReport:
    """Decide congruence preservation from the Newton coefficients:
    f is CP iff lcm(k) divides a_k in Z/mZ for every k < n."""
    c = decompose(f)
    for k in range(f.n):
        lm = unary_lcm_mod(k, f.mod)
        if not divides_in_ring(lm, Residue(c.coeffs[k], f.mod)):
            return CpReport(False, "coeff", CoeffWitness(k, c.coeffs[k], lm.value))
    return CpReport(True, "coeff")


def generator_family(n: int, mod: Modulus) -> list[FunctionTable]:
    """The tables of lcm(k)*P_k for 0 <= k < min(n, mu(m)).

    Every congruence preserving function Z/nZ -> Z/mZ is a Z/mZ-linear
    combination of these; coefficients beyond mu(m) are forced to zero.
    """
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    m = mod.m
    family = []
    for k in range(min(n, mu(mod))):
        lm = unary_lcm_mod(k, mod).value
        family.append(
            FunctionTable(n, mod, tuple(lm * binomial_mod(x, k, mod).value % m for x in range(n)))
        )
    return family


def is_basis(n: int, mod: Modulus) -> bool:
    """Is the generator family a basis of the CP functions?  True iff m
    has no prime divisor p < min(n, m)."""
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    bound = min(n, mod.m)
    return all(p >= bound for p, _ in mod.factors)


def _allowed_coefficients(n: int, mod: Modulus) -> list[list[int]]:
    # Coefficient k of a CP function ranges over the multiples of
    # lcm(k) mod m; for k >= mu(m) that is just {0}.
    return [[r.value for r in multiples_of(unary_lcm_mod(k, mod))] for k in range(n)]


def enumerate_cp(n: int, mod: Modulus, budget: int = DEFAULT_BUDGET) -> Iterator[FunctionTable]:
    """Yield every congruence preserving function Z/nZ -> Z/mZ exactly once.

    Coefficient tuples are walked in odometer order with a_0 moving
    fastest; distinct tuples give distinct functions, so the stream length
    is exactly the CP count.  Raises BudgetExceededError up front if that
    count exceeds the budget.
    """
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    allowed = _allowed_coefficients(n, mod)
    total = math.prod(len(choices) for choices in allowed)
    if total > budget:
        raise BudgetExceededError(total, budget, "CP functions")
    m = mod.m
    # column k holds the table of P_k scaled later by the coefficient
    columns = [[binomial_mod(x, k, mod).value for x in range(n)] for k in range(n)]

    def stream() -> Iterator[FunctionTable]:
        idx = [0] * n
        table = [0] * n
        while True:
            yield FunctionTable(n, mod, tuple(table))
            k = 0
            while k < n:
                col = columns[k]
                choices = allowed[k]
                old = choices[idx[k]]
                idx[k] += 1
                if idx[k] < len(choices):
                    delta = choices[idx[k]] - old
                    for x in range(k, n):
                        table[x] = (table[x] + delta * col[x]) % m
                    break
                idx[k] = 0
                delta = choices[0] - old
                for x in range(k, n):
                    table[x] = (table[x] + delta * col[x]) % m
                k += 1
            if k == n:
                return

    return stream()


def random_cp_many(n: int, mod: Modulus, seed: int, count: int) -> list[FunctionTable]:
    """Sample `count` CP functions from one seeded splitmix64 stream.

    Each Newton coefficient is drawn uniformly from the multiples of
    lcm(k) mod m, which by uniqueness of the decomposition is a uniform
    draw over all CP functions.
    """
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    allowed = _allowed_coefficients(n, mod)
    rng = SplitMix64(seed)
    tables = []
    for _ in range(count):
        coeffs = tuple(choices[rng.below(len(choices))] for choices in allowed)
        tables.append(evaluate_table(NewtonCoeffs(n, mod, coeffs)))
    return tables


def random_cp(n: int, mod: Modulus, seed: int) -> FunctionTable:
    """One uniformly random CP function, fully determined by the seed."""
    return random_cp_many(n, mod, seed, 1)[0]
