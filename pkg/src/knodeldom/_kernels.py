"""JIT-compiled kernels for bulk certification sweeps.

The construction builder and formula are compiled from the same functions
the public API runs, so the sweep cannot drift from ``construct_optimal_tds``
or ``gamma_t_formula``.  Kernels release the GIL; callers thread over ranges.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .domination import _fill_construction, _gamma_t_value

_JIT = dict(cache=True, nogil=True)

fill_construction = njit(**_JIT)(_fill_construction)
gamma_t_value = njit(**_JIT)(_gamma_t_value)


@njit(**_JIT)
def coverage_complete(delta, half, chosen, count, forward):
    """True if the offsets 2^k - 1 (k < delta) applied to chosen[:count] cover [1, half].

    ``forward`` marks choosers on the U side (targets i + offset); V-side
    choosers reach targets j - offset.  Indices are 1-based.
    """
    covered = np.zeros(half, np.uint8)
    seen = 0
    for pos in range(count):
        base = chosen[pos] - 1
        for k in range(delta):
            off = (1 << k) - 1
            c = base + off if forward else base - off
            if c >= half:
                c -= half
            elif c < 0:
                c += half
            if covered[c] == 0:
                covered[c] = 1
                seen += 1
    return seen == half


@njit(**_JIT)
def sweep_chunk(n_lo, n_hi, du, dv):
    """Certify every even n in [n_lo, n_hi]; return the first failing n, else 0."""
    for n in range(n_lo, n_hi + 1, 2):
        half = n // 2
        nu, nv = fill_construction(n, du, dv)
        if nu + nv != gamma_t_value(n):
            return n
        if not coverage_complete(3, half, du, nu, True):
            return n
        if not coverage_complete(3, half, dv, nv, False):
            return n
    return 0
