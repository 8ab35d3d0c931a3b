# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact rank kernels.

Same algorithms as the pure fallback: fraction-free (Bareiss) elimination
for ranks over the rationals and modular elimination for GF(p).  Products
are taken in 128-bit integers; if an eliminated entry leaves the int64
range, ``rank_bareiss`` returns -1 and the caller must redo the matrix with
arbitrary-precision arithmetic.
"""

cdef extern from *:
    ctypedef long long lll "__int128"

DEF I64_MAX = 9223372036854775807


def rank_bareiss(object flat, Py_ssize_t m, Py_ssize_t n):
    """Rank over the rationals of the m*n row-major int64 matrix, or -1."""
    cdef long long[::1] src = flat
    if m == 0 or n == 0:
        return 0
    cdef long long[::1] a = src.copy()
    cdef Py_ssize_t rank = 0, col, i, j, piv, rbase, ibase
    cdef long long prev = 1, pivot, lead, t
    cdef lll num
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if a[i * n + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                t = a[piv * n + j]
                a[piv * n + j] = a[rank * n + j]
                a[rank * n + j] = t
        rbase = rank * n
        pivot = a[rbase + col]
        for i in range(rank + 1, m):
            ibase = i * n
            lead = a[ibase + col]
            for j in range(col + 1, n):
                num = <lll> a[ibase + j] * pivot - <lll> lead * a[rbase + j]
                num = num / prev
                if num > <lll> I64_MAX or num < -(<lll> I64_MAX):
                    return -1
                a[ibase + j] = <long long> num
            a[ibase + col] = 0
        prev = pivot
        rank += 1
    return rank


def rank_mod_p(object flat, Py_ssize_t m, Py_ssize_t n, long long p):
    """Rank over GF(p), p an odd prime below 2**31, of an int64 matrix."""
    cdef long long[::1] src = flat
    if m == 0 or n == 0:
        return 0
    cdef long long[::1] a = src.copy()
    cdef Py_ssize_t rank = 0, col, i, j, piv, rbase, ibase
    cdef long long inv, f, t
    for i in range(m * n):
        a[i] = a[i] % p
        if a[i] < 0:
            a[i] += p
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if a[i * n + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(col, n):
                t = a[piv * n + j]
                a[piv * n + j] = a[rank * n + j]
                a[rank * n + j] = t
        rbase = rank * n
        inv = _inv_mod(a[rbase + col], p)
        for i in range(rank + 1, m):
            ibase = i * n
            if a[ibase + col] != 0:
                f = (a[ibase + col] * inv) % p
                for j in range(col, n):
                    a[ibase + j] = (a[ibase + j] - f * a[rbase + j]) % p
                    if a[ibase + j] < 0:
                        a[ibase + j] += p
        rank += 1
    return rank


cdef long long _inv_mod(long long x, long long p):
    # Fermat: x^(p-2) mod p; products stay below 2**62 for p < 2**31
    cdef long long result = 1, base = x % p, e = p - 2
    while e > 0:
        if e & 1:
            result = (result * base) % p
        base = (base * base) % p
        e >>= 1
    return result
