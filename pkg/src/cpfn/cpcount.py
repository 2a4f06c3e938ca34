"""Counting congruence preserving functions Z/nZ -> Z/mZ.

Three independent formulas give the same exact count:

* product: the number of admissible coefficient tuples, the product over
  k < n of the number of multiples of lcm(k) in Z/mZ;
* closed: per prime power p^e dividing m, p raised to p + p^2 + ... + p^e
  when n >= p^e and to p + ... + p^l + (e - l)*n with l = ilog(n, p)
  otherwise, multiplied across the primes of m;
* bhargava: for prime-power moduli, p^(e*n - sum_{k=1}^{n-1} min(e, ilog(k, p))).

A fourth, budgeted method classifies every one of the m**n tables with
the direct check.  All counts are exact Python ints (they grow like
p^(p + p^2 + ...), far beyond any fixed width).
"""

from __future__ import annotations

from .errors import BudgetExceededError
from .modring import Modulus, factorize, ilog, subgroup_order
from . import sweeps

DEFAULT_BUDGET = 10**6


def cp_count_product(n: int, mod: Modulus) -> int:
    """CP count as the product over k < n of the subgroup orders of
    lcm(k) in Z/mZ (one factor per free Newton coefficient)."""
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    count = 1
    for k in range(n):
        count *= subgroup_order(mod, k)
    return count


def cp_count_closed(n: int, mod: Modulus) -> int:
    """CP count from the closed per-prime-power formula."""
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    count = 1
    for p, e in mod.factors:
        if n >= p**e:
            exponent = sum(p**j for j in range(1, e + 1))
        else:
            l = ilog(n, p)
            exponent = sum(p**j for j in range(1, l + 1)) + (e - l) * n
        count *= p**exponent
    return count


def cp_count_bhargava(n: int, p: int, e: int) -> int:
    """CP count for a prime-power modulus p**e in exponent form
    p^(e*n - sum_{k=1}^{n-1} min(e, ilog(k, p)))."""
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    if e < 1:
        raise ValueError(f"exponent must be >= 1, got {e}")
    if factorize(p).factors != ((p, 1),):
        raise ValueError(f"{p} is not prime")
    exponent = e * n - sum(min(e, ilog(k, p)) for k in range(1, n))
    return p**exponent


def cp_count_exhaustive(n: int, mod: Modulus, budget: int = DEFAULT_BUDGET) -> int:
    """CP count by classifying all m**n tables with the direct check.

    Raises BudgetExceededError when m**n exceeds the budget.
    """
    if n < 1:
        raise ValueError(f"domain size must be >= 1, got {n}")
    total = mod.m**n
    if total > budget:
        raise BudgetExceededError(total, budget)
    return sweeps.count_cp_tables(n, mod)


def cp_count(n: int, mod: Modulus, method: str = "product", budget: int = DEFAULT_BUDGET) -> int:
    """Count CP functions Z/nZ -> Z/mZ by the chosen method.

    All methods agree; `exhaustive` additionally demonstrates it against
    the raw definition within a table budget (default 10**6).
    """
    if method == "product":
        return cp_count_product(n, mod)
    if method == "closed":
        return cp_count_closed(n, mod)
    if method == "exhaustive":
        return cp_count_exhaustive(n, mod, budget)
    raise ValueError(f"unknown method {method!r}")
