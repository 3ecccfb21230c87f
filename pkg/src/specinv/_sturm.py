"""Sturm-sequence kernels for symmetric tridiagonal matrices.

The matrix has diagonal ``d`` and squared off-diagonal ``e2``.
"""

import numpy as np
from numba import njit

_TINY = np.finfo(float).tiny


@njit(cache=True, nogil=True)
def sturm_count(d, e2, lam):
    """Number of eigenvalues strictly below ``lam``.

    Counts negative pivots of the LDL^T factorization of T - lam*I.
    """
    count = 0
    q = d[0] - lam
    if q < 0.0:
        count += 1
    for i in range(1, d.size):
        if q == 0.0:
            q = _TINY
        q = d[i] - lam - e2[i - 1] / q
        if q < 0.0:
            count += 1
    return count


@njit(cache=True, nogil=True)
def bisect_kth(d, e2, k, lo, hi, tol):
    """Shrink ``[lo, hi]`` around eigenvalue number ``k`` (0-based).

    Requires count(lo) <= k < count(hi).  Stops at width ``tol`` or when
    the midpoint is no longer representable between the ends.
    """
    steps = 0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if sturm_count(d, e2, mid) > k:
            hi = mid
        else:
            lo = mid
        steps += 1
    return lo, hi, steps
