"""Whole-space sweeps over all m**n value tables.

These wrap the kernel backend (compiled when available) with the
number-theoretic inputs it needs: the reduced congruence constraints, the
signed binomial weight matrix, and the per-coefficient divisibility gcds.
"""

from __future__ import annotations

import math
from typing import NamedTuple, Optional

from . import kernels
from .cpcheck import reduced_pairs
from .modring import Modulus, _lcm_mod
from .newton import decompose_matrix


class AgreementResult(NamedTuple):
    total: int
    direct: int
    coeff: int
    disagreements: int
    witness: Optional[tuple[int, ...]]


def _pair_triples(n: int, mod: Modulus) -> list[tuple[int, int, int]]:
    return [(p.a, p.b, p.d) for p in reduced_pairs(n, mod)]


def count_cp_tables(n: int, mod: Modulus) -> int:
    """Number of tables in [0, m)^n passing the direct CP check."""
    return kernels.count_cp_tables(n, mod.m, _pair_triples(n, mod))


def cp_agreement(n: int, mod: Modulus) -> AgreementResult:
    """Classify every table in [0, m)^n with both CP routes and tally
    agreement; witness is the first disagreeing table, if any."""
    m = mod.m
    gcds = [math.gcd(_lcm_mod(k, m), m) for k in range(n)]
    result = kernels.cp_agreement_sweep(
        n, m, _pair_triples(n, mod), decompose_matrix(n, mod), gcds
    )
    return AgreementResult(*result)
