"""Pure-Python exact rank kernels.

Fraction-free (Bareiss) elimination over the integers gives ranks over the
rationals without ever leaving exact arithmetic; Python's big integers make
it overflow-proof.  The modular kernel reduces entries into GF(p) and runs
ordinary elimination there.  Both mutate a private copy of the input.
"""

from __future__ import annotations

from typing import Sequence


def rank_rational(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer matrix over the rationals, fraction-free."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return 0
    a = [list(row) for row in rows]
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if a[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            a[piv], a[rank] = a[rank], a[piv]
        pr = a[rank]
        pivot = pr[col]
        for i in range(rank + 1, m):
            ri = a[i]
            lead = ri[col]
            if lead:
                for j in range(col + 1, n):
                    # exact division: entries stay minors of the input
                    ri[j] = (ri[j] * pivot - lead * pr[j]) // prev
                ri[col] = 0
            elif prev != 1 or pivot != 1:
                for j in range(col + 1, n):
                    ri[j] = (ri[j] * pivot) // prev
        prev = pivot
        rank += 1
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank of an integer matrix over GF(p) for a prime p."""
    if p == 2:
        return _rank_mod2(rows)
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return 0
    a = [[x % p for x in row] for row in rows]
    rank = 0
    for col in range(n):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if a[i][col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            a[piv], a[rank] = a[rank], a[piv]
        pr = a[rank]
        inv = pow(pr[col], p - 2, p)
        for i in range(rank + 1, m):
            ri = a[i]
            if ri[col]:
                f = (ri[col] * inv) % p
                for j in range(col, n):
                    ri[j] = (ri[j] - f * pr[j]) % p
        rank += 1
    return rank


def _rank_mod2(rows: Sequence[Sequence[int]]) -> int:
    # rows packed into Python ints; xor elimination
    packed = []
    for row in rows:
        acc = 0
        for j, x in enumerate(row):
            if x & 1:
                acc |= 1 << j
        packed.append(acc)
    rank = 0
    for col_bit in _column_bits(packed):
        piv = -1
        for i in range(rank, len(packed)):
            if packed[i] & col_bit:
                piv = i
                break
        if piv < 0:
            continue
        packed[piv], packed[rank] = packed[rank], packed[piv]
        pr = packed[rank]
        for i in range(rank + 1, len(packed)):
            if packed[i] & col_bit:
                packed[i] ^= pr
        rank += 1
    return rank


def _column_bits(packed):
    width = max((x.bit_length() for x in packed), default=0)
    return (1 << j for j in range(width))
