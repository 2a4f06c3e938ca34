"""Pure-Python sweep kernels; the import-time fallback for cpfn._ckernel.

Both backends expose the same two functions with identical semantics;
tests assert they agree wherever both are importable.
"""

from __future__ import annotations

from itertools import product

BACKEND = "python"


def count_cp_tables(n, m, pairs):
    """Count tables f in [0, m)^n satisfying every (a, b, d) constraint
    f(b) = f(a) (mod d).  An empty constraint set accepts every table.

    Visiting order does not affect the count, so this one may lean on
    itertools.product for speed.
    """
    if not pairs:
        return m**n
    count = 0
    for vals in product(range(m), repeat=n):
        for a, b, d in pairs:
            if (vals[b] - vals[a]) % d:
                break
        else:
            count += 1
    return count


def cp_agreement_sweep(n, m, pairs, matrix, gcds):
    """Run both CP decision routes over every table in [0, m)^n.

    `pairs` is the reduced constraint list for the direct route; `matrix`
    holds the signed binomial weights so row k dotted with the table gives
    Newton coefficient a_k, and `gcds[k]` = gcd(lcm(k) mod m, m) so the
    coefficient route passes iff a_k % gcds[k] == 0 for all k.

    Returns (total, direct_count, coeff_count, disagreements, witness)
    where witness is the first table (as a tuple) on which the two routes
    disagree, or None.  Tables are visited in odometer order with f(0)
    varying fastest, matching the compiled kernel exactly.
    """
    rows = [tuple(row) for row in matrix]
    gs = tuple(gcds)
    total = direct_count = coeff_count = disagreements = 0
    witness = None
    vals = [0] * n
    while True:
        total += 1
        direct = True
        for a, b, d in pairs:
            if (vals[b] - vals[a]) % d:
                direct = False
                break
        coeff = True
        for k in range(n):
            row = rows[k]
            acc = 0
            for i in range(k + 1):
                acc += row[i] * vals[i]
            if acc % m % gs[k]:
                coeff = False
                break
        direct_count += direct
        coeff_count += coeff
        if direct != coeff:
            disagreements += 1
            if witness is None:
                witness = tuple(vals)
        i = 0
        while i < n and vals[i] == m - 1:
            vals[i] = 0
            i += 1
        if i == n:
            break
        vals[i] += 1
    return total, direct_count, coeff_count, disagreements, witness
