# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernels mirroring cpfn._pykernel exactly.

The odometer walks every table f in [0, m)^n; constraint and coefficient
checks are plain C integer arithmetic.  Intermediate sums stay far below
2^63: values and weights are < m and the caller only sweeps spaces with
m**n within a budget, so m is small.
"""

from libc.stdlib cimport calloc, free

BACKEND = "cython"


def count_cp_tables(int n, long long m, pairs):
    """Count tables in [0, m)^n satisfying every (a, b, d) constraint
    f(b) = f(a) (mod d).  An empty constraint set accepts every table."""
    if not pairs:
        return int(m) ** n

    cdef int npairs = len(pairs)
    cdef long long *f = <long long *> calloc(n, sizeof(long long))
    cdef int *pa = <int *> calloc(npairs, sizeof(int))
    cdef int *pb = <int *> calloc(npairs, sizeof(int))
    cdef long long *pd = <long long *> calloc(npairs, sizeof(long long))
    if f == NULL or pa == NULL or pb == NULL or pd == NULL:
        free(f); free(pa); free(pb); free(pd)
        raise MemoryError()

    cdef int j, i
    for j, (a, b, d) in enumerate(pairs):
        pa[j] = a
        pb[j] = b
        pd[j] = d

    cdef long long count = 0
    cdef bint ok
    try:
        while True:
            ok = True
            for j in range(npairs):
                # C remainder of a difference in (-m, m) is 0 iff congruent
                if (f[pb[j]] - f[pa[j]]) % pd[j] != 0:
                    ok = False
                    break
            if ok:
                count += 1
            i = 0
            while i < n and f[i] == m - 1:
                f[i] = 0
                i += 1
            if i == n:
                break
            f[i] += 1
    finally:
        free(f); free(pa); free(pb); free(pd)
    return count


def cp_agreement_sweep(int n, long long m, pairs, matrix, gcds):
    """Run both CP decision routes over every table in [0, m)^n; see the
    pure-Python twin for the argument and result contract."""
    cdef int npairs = len(pairs)
    cdef long long *f = <long long *> calloc(n, sizeof(long long))
    cdef int *pa = <int *> calloc(max(npairs, 1), sizeof(int))
    cdef int *pb = <int *> calloc(max(npairs, 1), sizeof(int))
    cdef long long *pd = <long long *> calloc(max(npairs, 1), sizeof(long long))
    # row k of the signed weight matrix, flattened at stride n
    cdef long long *w = <long long *> calloc(<size_t> n * n, sizeof(long long))
    cdef long long *g = <long long *> calloc(n, sizeof(long long))
    if f == NULL or pa == NULL or pb == NULL or pd == NULL or w == NULL or g == NULL:
        free(f); free(pa); free(pb); free(pd); free(w); free(g)
        raise MemoryError()

    cdef int j, i, k
    for j, (a, b, d) in enumerate(pairs):
        pa[j] = a
        pb[j] = b
        pd[j] = d
    for k, row in enumerate(matrix):
        for i, entry in enumerate(row):
            w[k * n + i] = entry
    for k, gk in enumerate(gcds):
        g[k] = gk

    cdef long long total = 0, direct_count = 0, coeff_count = 0, disagreements = 0
    cdef long long acc
    cdef bint direct, coeff
    witness = None
    try:
        while True:
            total += 1
            direct = True
            for j in range(npairs):
                if (f[pb[j]] - f[pa[j]]) % pd[j] != 0:
                    direct = False
                    break
            coeff = True
            for k in range(n):
                acc = 0
                for i in range(k + 1):
                    acc += w[k * n + i] * f[i]
                if (acc % m) % g[k] != 0:
                    coeff = False
                    break
            if direct:
                direct_count += 1
            if coeff:
                coeff_count += 1
            if direct != coeff:
                disagreements += 1
                if witness is None:
                    witness = tuple(f[i] for i in range(n))
            i = 0
            while i < n and f[i] == m - 1:
                f[i] = 0
                i += 1
            if i == n:
                break
            f[i] += 1
    finally:
        free(f); free(pa); free(pb); free(pd); free(w); free(g)
    return total, direct_count, coeff_count, disagreements, witness
