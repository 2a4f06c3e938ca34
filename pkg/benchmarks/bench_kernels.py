#!/usr/bin/env python3
"""Benchmark the compiled sweep kernel against the pure-Python fallback.

Both backends classify entire table spaces [0, m)^n: `count` runs the
direct congruence check only, `agree` additionally decomposes every table
and runs the coefficient check.  Usage:

    python benchmarks/bench_kernels.py
"""

import math
import time

from cpfn import _pykernel
from cpfn.cpcheck import reduced_pairs
from cpfn.modring import _lcm_mod, factorize
from cpfn.newton import decompose_matrix

try:
    from cpfn import _ckernel
except ImportError:
    _ckernel = None

CASES = [(6, 6), (6, 8), (5, 12), (4, 23), (7, 5)]


def kernel_inputs(n, m):
    mod = factorize(m)
    pairs = [(p.a, p.b, p.d) for p in reduced_pairs(n, mod)]
    matrix = decompose_matrix(n, mod)
    gcds = [math.gcd(_lcm_mod(k, m), m) for k in range(n)]
    return pairs, matrix, gcds


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - start, out


def main():
    if _ckernel is None:
        print("compiled kernel not built; timing the pure backend only")
    header = f"{'case':>10} {'tables':>9} {'kind':>6} {'python':>9} {'cython':>9} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for n, m in CASES:
        pairs, matrix, gcds = kernel_inputs(n, m)
        for kind in ("count", "agree"):
            if kind == "count":
                py_t, py_out = timed(_pykernel.count_cp_tables, n, m, pairs)
                if _ckernel:
                    c_t, c_out = timed(_ckernel.count_cp_tables, n, m, pairs)
            else:
                py_t, py_out = timed(_pykernel.cp_agreement_sweep, n, m, pairs, matrix, gcds)
                if _ckernel:
                    c_t, c_out = timed(_ckernel.cp_agreement_sweep, n, m, pairs, matrix, gcds)
            if _ckernel:
                assert py_out == c_out, (n, m, kind)
                print(
                    f"{f'({n},{m})':>10} {m**n:>9} {kind:>6} "
                    f"{py_t:>8.3f}s {c_t:>8.3f}s {py_t / c_t:>7.1f}x"
                )
            else:
                print(f"{f'({n},{m})':>10} {m**n:>9} {kind:>6} {py_t:>8.3f}s {'-':>9} {'-':>8}")


if __name__ == "__main__":
    main()
