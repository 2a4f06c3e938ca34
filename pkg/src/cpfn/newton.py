"""The binomial (Newton) basis for functions Z/nZ -> Z/mZ.

P_k(x) = C(x, k) is integer valued, so "C(x, k) mod m" is well defined
even though k! has no inverse in Z/mZ.  The evaluation order matters: the
binomial coefficient is reduced mod m first and only then multiplied by
the coefficient a_k.  Every function table has a unique coefficient
vector (a_0, ..., a_{n-1}) with f(x) = sum_k a_k * C(x, k) mod m, found
by forward differences.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .modring import Modulus, Residue


@lru_cache(maxsize=None)
def _pascal_row(x: int, m: int) -> tuple[int, ...]:
    # Row x of Pascal's triangle mod m via the additive recurrence, which
    # is exactly "evaluate C(x, k) over the integers, then reduce".
    row = [1 % m]
    for _ in range(x):
        nxt = [1 % m]
        nxt.extend((row[i - 1] + row[i]) % m for i in range(1, len(row)))
        nxt.append(1 % m)
        row = nxt
    return tuple(row)


def binomial_mod(x: int, k: int, mod: Modulus) -> Residue:
    """C(x, k) as an exact integer, reduced mod m; 0 when k > x."""
    if x < 0 or k < 0:
        raise ValueError(f"binomial_mod needs x, k >= 0, got x={x} k={k}")
    if k > x:
        return Residue(0, mod)
    return Residue(_pascal_row(x, mod.m)[k], mod)


@dataclass(frozen=True)
class FunctionTable:
    """A function Z/nZ -> Z/mZ as its table of values on {0, ..., n-1}.

    Values must already be reduced into [0, m); use FunctionTable.reduced
    to build one from raw (possibly negative) integers.
    """

    n: int
    mod: Modulus
    values: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"domain size must be >= 1, got {self.n}")
        if len(self.values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(self.values)}")
        m = self.mod.m
        for v in self.values:
            if not 0 <= v < m:
                raise ValueError(f"value {v} not reduced into [0, {m})")

    @classmethod
    def reduced(cls, values, mod: Modulus) -> "FunctionTable":
        """Build a table from arbitrary integers, reducing each mod m."""
        vals = tuple(v % mod.m for v in values)
        return cls(len(vals), mod, vals)


@dataclass(frozen=True)
class NewtonCoeffs:
    """Coefficients (a_0, ..., a_{n-1}) of a function in the binomial
    basis; each entry is a residue in [0, m)."""

    n: int
    mod: Modulus
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"length must be >= 1, got {self.n}")
        if len(self.coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(self.coeffs)}")
        m = self.mod.m
        for a in self.coeffs:
            if not 0 <= a < m:
                raise ValueError(f"coefficient {a} not reduced into [0, {m})")

    @classmethod
    def reduced(cls, coeffs, mod: Modulus) -> "NewtonCoeffs":
        """Build a coefficient vector from arbitrary integers, reducing mod m."""
        cs = tuple(a % mod.m for a in coeffs)
        return cls(len(cs), mod, cs)


def evaluate(c: NewtonCoeffs, x: int) -> Residue:
    """Evaluate sum_k a_k * C(x, k) in Z/mZ at x in {0, ..., n-1}.

    Each binomial value is reduced mod m before the multiplication by a_k;
    multiplying first and dividing by k! later would be wrong in Z/mZ.
    """
    if not 0 <= x < c.n:
        raise ValueError(f"evaluation point {x} outside domain [0, {c.n})")
    m = c.mod.m
    row = _pascal_row(x, m)
    acc = 0
    for k in range(min(c.n, x + 1)):
        acc += c.coeffs[k] * row[k]
    return Residue(acc % m, c.mod)


def evaluate_table(c: NewtonCoeffs) -> FunctionTable:
    """The full value table of a coefficient vector on {0, ..., n-1}."""
    return FunctionTable(c.n, c.mod, tuple(evaluate(c, x).value for x in range(c.n)))


def decompose(f: FunctionTable) -> NewtonCoeffs:
    """The unique Newton coefficients of a function table.

    Closed-form forward differences: a_k = sum_i (-1)^(k-i) C(k,i) f(i),
    all folded into Z/mZ.  evaluate() on the result reproduces f exactly.

    >>> from cpfn.modring import factorize
    >>> f = FunctionTable(6, factorize(6), (0, 3, 4, 3, 0, 1))
    >>> decompose(f).coeffs
    (0, 3, 4, 0, 0, 0)
    """
    m = f.mod.m
    coeffs = []
    for k in range(f.n):
        row = _pascal_row(k, m)
        acc = 0
        for i in range(k + 1):
            term = row[i] if (k - i) % 2 == 0 else (m - row[i]) % m
            acc += term * f.values[i]
        coeffs.append(acc % m)
    return NewtonCoeffs(f.n, f.mod, tuple(coeffs))


def decompose_matrix(n: int, mod: Modulus) -> tuple[tuple[int, ...], ...]:
    """Signed binomial weights W with W[k][i] = (-1)^(k-i) C(k,i) mod m;
    row k dotted with a value table gives Newton coefficient a_k."""
    m = mod.m
    rows = []
    for k in range(n):
        row = _pascal_row(k, m)
        rows.append(
            tuple(row[i] if (k - i) % 2 == 0 else (m - row[i]) % m for i in range(k + 1))
        )
    return tuple(rows)


def newton_degree(c: NewtonCoeffs) -> int:
    """Largest k with a_k != 0, or -1 for the zero function."""
    for k in range(c.n - 1, -1, -1):
        if c.coeffs[k] != 0:
            return k
    return -1
