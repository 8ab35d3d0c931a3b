"""Exact matrix ranks with an optional compiled fast path.

``rank`` is the only entry point the rest of the package uses.  At import
time the compiled kernel (``edgechains._fastrank``, built from Cython) is
picked up when present unless ``EDGECHAINS_PURE`` is set in the
environment; otherwise the pure-Python kernels serve every request.  The
compiled Bareiss kernel works in int64 and signals overflow by returning
-1, in which case the matrix is redone with Python big integers, so results
are identical across backends.
"""

from __future__ import annotations

import os
from array import array
from typing import Sequence

from . import _pyrank

try:  # built by setup.py when Cython and a C compiler are available
    from . import _fastrank as _compiled
except ImportError:  # pragma: no cover - depends on the build environment
    _compiled = None

if os.environ.get("EDGECHAINS_PURE"):
    _compiled = None

RATIONAL = "rational"

_I64_MIN = -(2**63)
_I64_MAX = 2**63 - 1


def backend_name() -> str:
    return "compiled" if _compiled is not None else "pure"


def rank(rows: Sequence[Sequence[int]], field: object = RATIONAL) -> int:
    """Rank of an integer matrix over the rationals or over GF(p)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    if m == 0 or n == 0:
        return 0
    if field == RATIONAL:
        if _compiled is not None:
            flat = _flatten_i64(rows, m, n)
            if flat is not None:
                r = _compiled.rank_bareiss(flat, m, n)
                if r >= 0:
                    return r
        return _pyrank.rank_rational(rows)
    p = validate_field(field)
    if p == 2:
        return _pyrank.rank_mod_p(rows, 2)
    if _compiled is not None:
        flat = _flatten_i64(rows, m, n)
        if flat is not None:
            return _compiled.rank_mod_p(flat, m, n, p)
    return _pyrank.rank_mod_p(rows, p)


def validate_field(field: object) -> object:
    """Normalize a field descriptor: ``"rational"`` or a prime below 2**31."""
    if field == RATIONAL:
        return RATIONAL
    if isinstance(field, bool) or not isinstance(field, int):
        raise ValueError(f"field must be 'rational' or a prime, got {field!r}")
    if not 2 <= field < 2**31 or not _is_prime(field):
        raise ValueError(f"field characteristic must be a prime below 2**31, got {field}")
    return field


def _flatten_i64(rows, m, n):
    flat = array("q", bytes(8 * m * n))
    k = 0
    try:
        for row in rows:
            for x in row:
                flat[k] = x
                k += 1
    except OverflowError:
        return None
    return flat


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if p % q == 0:
            return p == q
    d = 37
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True
