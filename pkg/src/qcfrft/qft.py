"""Discrete two-sided quaternion Fourier transform on centered lattices.

The transform pairs an i-plane kernel on the left (axes 1, 2) with a
j-plane kernel on the right (axes 3, 4):

    F(u) = sum_t (1/2pi) e^{-i t1.u1}  f(t)  (1/2pi) e^{-j t2.u2} * cell

On centered index grids the axis phases reduce to (n - c)(k - c) * 2pi/N,
so each 2-D block is a pair of phase-corrected complex FFTs.  The left
kernel acts componentwise on the symplectic split (f1, f2); the right
kernel mixes the pair, which diagonalizes over G+- = f1 +- i f2:

    (f1 + f2 j) e^{s j th}  ->  G+ picks e^{+ s i th},  G- picks e^{- s i th}.

The discrete map is an invertible composition of diagonal phases and
unitary DFTs; ``qft_inverse`` applies the adjoint quadrature with the
frequency cell measure, which is its exact inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _accel
from .algebra import symplectic_join, symplectic_split
from .grids import FreqLattice, Lattice
from .signal import QSignal4

__all__ = ["QSpectrum", "qft_direct", "qft_fast", "qft_inverse", "array_lp_norm"]

_INV_4PI2 = 1.0 / (4.0 * np.pi**2)


@dataclass(frozen=True)
class QSpectrum:
    """Quaternion field sampled on a centered frequency lattice."""

    freq: FreqLattice
    data: np.ndarray

    def __post_init__(self):
        data = np.ascontiguousarray(self.data, dtype=np.float64)
        expected = self.freq.dims + (4,)
        if data.shape != expected:
            raise ValueError(f"data shape {data.shape} does not match lattice {expected}")
        data.flags.writeable = False
        object.__setattr__(self, "data", data)


def array_lp_norm(values: np.ndarray, cell_measure: float, p: float) -> float:
    """L^p quadrature norm of a quaternion-valued array (..., 4)."""
    mags = np.sqrt(np.sum(values * values, axis=-1))
    if p == np.inf:
        return float(mags.max())
    p = float(p)
    if p < 1.0:
        raise ValueError(f"require p >= 1 or p = inf, got {p}")
    return float(np.sum(mags**p) * cell_measure) ** (1.0 / p)


def _centered_axis_dft(arr: np.ndarray, axis: int, sign: int) -> np.ndarray:
    """Centered DFT along one axis: kernel exp(sign * 2j*pi*(n-c)(k-c)/N)."""
    if sign == +1:
        return np.conj(_centered_axis_dft(np.conj(arr), axis, -1))
    n = arr.shape[axis]
    c = n // 2
    idx = np.arange(n)
    w_in = np.exp(2j * np.pi * c * idx / n)
    w_out = np.exp(2j * np.pi * (c * idx - c * c) / n)
    shape = [1] * arr.ndim
    shape[axis] = n
    out = np.fft.fft(arr * w_in.reshape(shape), axis=axis)
    return out * w_out.reshape(shape)


def _centered_block_dft(arr: np.ndarray, axes: tuple[int, int], sign: int) -> np.ndarray:
    for ax in axes:
        arr = _centered_axis_dft(arr, ax, sign)
    return arr


def _left_apply(c1, c2, sign, axes=(0, 1)):
    """Left i-plane kernel: plain complex DFT on both split components."""
    return _centered_block_dft(c1, axes, sign), _centered_block_dft(c2, axes, sign)


def _right_apply(c1, c2, sign, axes=(2, 3)):
    """Right j-plane kernel via the G+- = c1 +- i c2 diagonalization."""
    gp = _centered_block_dft(c1 + 1j * c2, axes, sign)
    gm = _centered_block_dft(c1 - 1j * c2, axes, -sign)
    return 0.5 * (gp + gm), (gp - gm) / 2j


def _qft_core(c1, c2, sign, scale):
    c1, c2 = _left_apply(c1, c2, sign)
    c1, c2 = _right_apply(c1, c2, sign)
    return c1 * scale, c2 * scale


def qft_fast(f: QSignal4) -> QSpectrum:
    """FFT-based two-sided transform; equals ``qft_direct`` to rounding."""
    c1, c2 = symplectic_split(f.data)
    freq = f.lattice.freq()
    scale = f.lattice.cell_measure * _INV_4PI2
    s1, s2 = _qft_core(c1, c2, -1, scale)
    return QSpectrum(freq, symplectic_join(s1, s2))


def qft_direct(f: QSignal4) -> QSpectrum:
    """Literal lattice summation of the two-sided transform (oracle path).

    O(N^8); use for verification or small lattices only.
    """
    freq = f.lattice.freq()
    n1, n2, n3, n4 = f.lattice.dims
    c1, c2 = symplectic_split(f.data)
    f1 = np.ascontiguousarray(c1.reshape(n1 * n2, n3 * n4))
    f2 = np.ascontiguousarray(c2.reshape(n1 * n2, n3 * n4))
    t1 = f.lattice.block_coords(0)
    t2 = f.lattice.block_coords(1)
    # QFT kernel e^{-i t.u} is the chirp-free sandwich kernel at xi = -u.
    u1 = freq.block_coords(0)
    u2 = freq.block_coords(1)
    xi = np.empty((freq.size, 4))
    xi[:, 0:2] = -np.repeat(u1, len(u2), axis=0)
    xi[:, 2:4] = -np.tile(u2, (len(u1), 1))
    d = 1.0 / (2.0 * np.pi)
    s1, s2 = _accel.direct_sandwich(
        f1, f2, t1, t2, xi, 0.0, 1.0, 0.0, complex(d), 0.0, 1.0, 0.0, complex(d)
    )
    s1 = s1.reshape(freq.dims) * f.lattice.cell_measure
    s2 = s2.reshape(freq.dims) * f.lattice.cell_measure
    return QSpectrum(freq, symplectic_join(s1, s2))


def qft_inverse(F: QSpectrum, lattice: Lattice | None = None) -> QSignal4:
    """Exact inverse of the discrete forward map.

    Applies the conjugate kernels with the frequency cell measure:
    f(t) = sum_u (1/2pi) e^{+i t1.u1} F(u) (1/2pi) e^{+j t2.u2} * du-cell.
    """
    if lattice is None:
        delta = tuple(2.0 * np.pi / (n * du) for n, du in zip(F.freq.dims, F.freq.du))
        lattice = Lattice(F.freq.dims, delta)
    else:
        if lattice.dims != F.freq.dims:
            raise ValueError(
                f"lattice dims {lattice.dims} do not match spectrum dims {F.freq.dims}"
            )
        prods = [n * d * du for n, d, du in zip(lattice.dims, lattice.delta, F.freq.du)]
        if any(abs(p - 2.0 * np.pi) > 1e-9 for p in prods):
            raise ValueError("lattice is inconsistent with the spectrum's frequency grid")
    c1, c2 = symplectic_split(F.data)
    scale = F.freq.cell_measure * _INV_4PI2
    s1, s2 = _qft_core(c1, c2, +1, scale)
    return QSignal4(lattice, symplectic_join(s1, s2))
