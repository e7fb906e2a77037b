"""Hot inner loop of the direct-quadrature transforms.

The direct (oracle) path evaluates, for every requested frequency point,
a full lattice sum with a left i-plane kernel and a right j-plane kernel.
In split components (f = f1 + f2*j) the right multiplication mixes the
pair through the real and imaginary parts of the j-plane kernel:

    S1(xi) = sum_mn ki[m] * (f1[m,n]*Wr[n] - f2[m,n]*Wi[n])
    S2(xi) = sum_mn ki[m] * (f1[m,n]*Wi[n] + f2[m,n]*Wr[n])

This is O(P * N^4) and dominates verification runtime, so it carries a
numba @njit implementation.  Set QCFRFT_PURE_NUMPY=1 to force the plain
numpy path (also used automatically when numba is unavailable).
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["direct_sandwich", "using_numba", "NUMBA_ENABLED"]

_FORCE_NUMPY = os.environ.get("QCFRFT_PURE_NUMPY", "").strip() in {"1", "true", "yes"}

try:
    if _FORCE_NUMPY:
        raise ImportError("pure-numpy path forced by QCFRFT_PURE_NUMPY")
    from numba import njit

    NUMBA_ENABLED = True
except ImportError:
    njit = None
    NUMBA_ENABLED = False


def _sandwich_numpy(f1, f2, t1, t2, xi, a1, b1, c1, d1, a2, b2, c2, d2):
    P = xi.shape[0]
    S1 = np.empty(P, dtype=np.complex128)
    S2 = np.empty(P, dtype=np.complex128)
    t1sq = (t1 * t1).sum(1)
    t2sq = (t2 * t2).sum(1)
    for p in range(P):
        x1, x2, x3, x4 = xi[p]
        m1 = (b1 * x1 + c1 * x2, -c1 * x1 + b1 * x2)
        m2 = (b2 * x3 + c2 * x4, -c2 * x3 + b2 * x4)
        ki = d1 * np.exp(
            -1j * (a1 * (t1sq + x1 * x1 + x2 * x2) - (t1[:, 0] * m1[0] + t1[:, 1] * m1[1]))
        )
        kj = d2 * np.exp(
            -1j * (a2 * (t2sq + x3 * x3 + x4 * x4) - (t2[:, 0] * m2[0] + t2[:, 1] * m2[1]))
        )
        wr, wi = kj.real, kj.imag
        S1[p] = ki @ (f1 @ wr - f2 @ wi)
        S2[p] = ki @ (f1 @ wi + f2 @ wr)
    return S1, S2


if NUMBA_ENABLED:

    @njit(cache=True)
    def _sandwich_numba(f1, f2, t1, t2, xi, a1, b1, c1, d1, a2, b2, c2, d2):  # pragma: no cover
        P = xi.shape[0]
        T1 = t1.shape[0]
        T2 = t2.shape[0]
        S1 = np.empty(P, dtype=np.complex128)
        S2 = np.empty(P, dtype=np.complex128)
        kj = np.empty(T2, dtype=np.complex128)
        for p in range(P):
            x1 = xi[p, 0]
            x2 = xi[p, 1]
            x3 = xi[p, 2]
            x4 = xi[p, 3]
            m11 = b1 * x1 + c1 * x2
            m12 = -c1 * x1 + b1 * x2
            m21 = b2 * x3 + c2 * x4
            m22 = -c2 * x3 + b2 * x4
            xi1sq = x1 * x1 + x2 * x2
            xi2sq = x3 * x3 + x4 * x4
            for n in range(T2):
                ph2 = a2 * (t2[n, 0] ** 2 + t2[n, 1] ** 2 + xi2sq) - (
                    t2[n, 0] * m21 + t2[n, 1] * m22
                )
                kj[n] = d2 * (np.cos(ph2) - 1j * np.sin(ph2))
            acc1 = 0.0 + 0.0j
            acc2 = 0.0 + 0.0j
            for m in range(T1):
                ph1 = a1 * (t1[m, 0] ** 2 + t1[m, 1] ** 2 + xi1sq) - (
                    t1[m, 0] * m11 + t1[m, 1] * m12
                )
                ki = d1 * (np.cos(ph1) - 1j * np.sin(ph1))
                row1 = 0.0 + 0.0j
                row2 = 0.0 + 0.0j
                for n in range(T2):
                    wr = kj[n].real
                    wi = kj[n].imag
                    row1 += f1[m, n] * wr - f2[m, n] * wi
                    row2 += f1[m, n] * wi + f2[m, n] * wr
                acc1 += ki * row1
                acc2 += ki * row2
            S1[p] = acc1
            S2[p] = acc2
        return S1, S2

    direct_sandwich = _sandwich_numba
else:
    direct_sandwich = _sandwich_numpy


def using_numba() -> bool:
    """True when the numba-compiled inner loop is active."""
    return NUMBA_ENABLED


def sandwich_numpy_reference(*args):
    """Always-available numpy path (used by the accel benchmark)."""
    return _sandwich_numpy(*args)
