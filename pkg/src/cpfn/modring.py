"""Exact arithmetic in Z/mZ: prime factorization, divisibility inside the
ring, the unary lcm function lcm(k) = lcm(1..k) and its canonical
associates, and the orders of the subgroups those elements generate.

Everything here is exact integer arithmetic.  lcm(k) reduced mod m is
computed from prime-power valuations, so it never materializes the huge
integer lcm(1..k); the big-integer route exists separately (unary_lcm)
and the two are cross-checked in the test suite.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache, reduce


@dataclass(frozen=True)
class Modulus:
    """A positive modulus m together with its sorted prime factorization.

    factors is a tuple of (prime, exponent) pairs with strictly increasing
    primes and exponents >= 1; m = 1 carries the empty tuple.  Build one
    with factorize() rather than by hand.
    """

    m: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"modulus must be >= 1, got {self.m}")
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1:
                raise ValueError("factors must be strictly increasing primes with exponents >= 1")
            prev = p
            prod *= p**e
        if prod != self.m:
            raise ValueError(f"factor list {self.factors!r} does not multiply to {self.m}")

    def divisors(self) -> list[int]:
        """All positive divisors of m, ascending."""
        divs = [1]
        for p, e in self.factors:
            divs = [d * p**c for d in divs for c in range(e + 1)]
        divs.sort()
        return divs

    def __repr__(self):
        return f"Modulus({self.m})"


@dataclass(frozen=True)
class Residue:
    """An element of Z/mZ, stored as its representative in [0, m)."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.m:
            raise ValueError(f"residue {self.value} out of range for modulus {self.modulus.m}")

    def __int__(self) -> int:
        return self.value

    __index__ = __int__


@lru_cache(maxsize=None)
def factorize(m: int) -> Modulus:
    """Factor m >= 1 by trial division and return the Modulus context.

    >>> factorize(12).factors
    ((2, 2), (3, 1))
    """
    if not isinstance(m, int):
        raise TypeError(f"modulus must be an int, got {type(m).__name__}")
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    factors = []
    rest = m
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Modulus(m, tuple(factors))


def ilog(x: int, base: int) -> int:
    """Largest exponent e with base**e <= x (x >= 1, base >= 2)."""
    if x < 1 or base < 2:
        raise ValueError(f"ilog needs x >= 1 and base >= 2, got x={x} base={base}")
    e = 0
    power = base
    while power <= x:
        e += 1
        power *= base
    return e


# Process-global prime sieve, regrown geometrically on demand.  Replacing
# the module globals is atomic, so concurrent readers at worst rebuild.
_sieve_limit = 0
_sieve_primes: list[int] = []


def primes_upto(k: int) -> list[int]:
    """All primes <= k, ascending (cached sieve, grows as needed)."""
    global _sieve_limit, _sieve_primes
    if k > _sieve_limit:
        limit = max(64, 2 * k)
        flags = bytearray([1]) * (limit + 1)
        flags[0:2] = b"\x00\x00"
        for p in range(2, math.isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = bytes((limit - p * p) // p + 1)
        primes = [i for i in range(limit + 1) if flags[i]]
        _sieve_primes, _sieve_limit = primes, limit
    return _sieve_primes[: bisect_right(_sieve_primes, k)]


def unary_lcm(k: int) -> int:
    """lcm of {1, ..., k} as an exact integer; lcm(0) = lcm(1) = 1."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return reduce(math.lcm, range(2, k + 1), 1)


@lru_cache(maxsize=None)
def _lcm_mod(k: int, m: int) -> int:
    # lcm(1..k) mod m as the product over primes q <= k of q^ilog(k, q),
    # each factor reduced immediately; no big integers involved.
    if k < 2:
        return 1 % m
    acc = 1 % m
    for q in primes_upto(k):
        acc = acc * pow(q, ilog(k, q), m) % m
    return acc


def unary_lcm_mod(k: int, mod: Modulus) -> Residue:
    """The residue of lcm(1..k) in Z/mZ, computed without big integers."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return Residue(_lcm_mod(k, mod.m), mod)


def divides_in_ring(a: Residue, x: Residue) -> bool:
    """Does a divide x in Z/mZ, i.e. is a*t = x (mod m) solvable for t?

    Standard linear-congruence criterion: solvable iff gcd(a, m) | x,
    where gcd(0, m) = m.
    """
    if a.modulus != x.modulus:
        raise ValueError(f"modulus mismatch: {a.modulus} vs {x.modulus}")
    return x.value % math.gcd(a.value, a.modulus.m) == 0


def mu(mod: Modulus) -> int:
    """The largest prime power p**e exactly dividing m; mu(1) = 1.

    This is also the least k with lcm(1..k) = 0 in Z/mZ (for m >= 2).
    """
    if not mod.factors:
        return 1
    return max(p**e for p, e in mod.factors)


def mu_prime(mod: Modulus) -> int:
    """The least k >= 0 such that m divides k!."""
    m = mod.m
    fact = 1 % m
    k = 0
    while fact != 0:
        k += 1
        fact = fact * k % m
    return k


def canonical_associate(k: int, mod: Modulus) -> Residue:
    """The distinguished representative gcd(lcm(1..k), m) of lcm(k)'s
    associate class in Z/mZ, reduced mod m.

    lcm(k) mod m equals this value times a unit of the ring; both generate
    the same subgroup.  Computed per prime of m as p^min(e, ilog(k, p)).
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    m = mod.m
    if k < 2:
        return Residue(1 % m, mod)
    g = 1
    for p, e in mod.factors:
        if p <= k:
            g *= p ** min(e, ilog(k, p))
    return Residue(g % m, mod)


def subgroup_order(mod: Modulus, k: int) -> int:
    """Order of the subgroup of Z/mZ generated by lcm(1..k), i.e. the
    number of its multiples: m / gcd(lcm(k), m)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return mod.m // math.gcd(_lcm_mod(k, mod.m), mod.m)


def multiples_of(a: Residue) -> list[Residue]:
    """The subgroup {a*t mod m : t} as an ascending list [0, g, 2g, ...],
    where g = gcd(a, m); its size is m/g."""
    mod = a.modulus
    g = math.gcd(a.value, mod.m)
    return [Residue(v, mod) for v in range(0, mod.m, g)]
