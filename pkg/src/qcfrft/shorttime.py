"""Short-time (windowed) coupled fractional transform on the sampled torus.

For each window position x on the (optionally strided) signal lattice the
field stores the fractional spectrum of t -> f(t) * conj(g(t - x)), with
g shifted circularly.  Circular shifting makes the discrete energy
identity and the reconstruction formula exact rather than truncation
limited; agreement with the continuous model is a separate question of
how well the lattice covers the signal.

Window positions are embarrassingly parallel; each one reuses the
deterministic fast transform path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .algebra import qconj, qmul, symplectic_join, symplectic_split
from .fractional import SpectrumField, _qcfrft_fast_split, qcfrft_inverse
from .grids import FreqLattice, Lattice
from .params import ParamSet
from .qft import array_lp_norm
from .signal import QSignal4, lp_norm

__all__ = [
    "Window",
    "TimeFreqField",
    "windowed_product",
    "shift_window",
    "stqcfrft_compute",
    "stqcfrft_reconstruct",
    "translation_xi_shift",
]


@dataclass(frozen=True)
class Window:
    """A quaternion window: any signal with nonzero L2 norm."""

    signal: QSignal4

    def __post_init__(self):
        if lp_norm(self.signal, 2) <= 0.0:
            raise ValueError("window must have nonzero L2 norm")

    @property
    def lattice(self) -> Lattice:
        return self.signal.lattice


def _as_window(g) -> Window:
    return g if isinstance(g, Window) else Window(g)


@dataclass(frozen=True)
class TimeFreqField:
    """Windowed-transform values indexed by (window position, frequency).

    ``values`` has shape (#positions,) + freq dims + (4,), positions
    flattened in C order over the strided index grid.
    """

    signal_lattice: Lattice
    stride: tuple[int, int, int, int]
    base_freq: FreqLattice
    params: ParamSet
    values: np.ndarray

    def __post_init__(self):
        stride = tuple(int(s) for s in self.stride)
        if len(stride) != 4 or any(s < 1 for s in stride):
            raise ValueError(f"stride must be four positive integers, got {stride}")
        object.__setattr__(self, "stride", stride)
        values = np.ascontiguousarray(self.values, dtype=np.float64)
        expected = (self.n_positions,) + self.base_freq.dims + (4,)
        if values.shape != expected:
            raise ValueError(f"values shape {values.shape} does not match {expected}")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def position_counts(self) -> tuple[int, ...]:
        return tuple(
            len(range(0, n, s)) for n, s in zip(self.signal_lattice.dims, self.stride)
        )

    @property
    def n_positions(self) -> int:
        return int(np.prod(self.position_counts))

    def position_indices(self) -> np.ndarray:
        """Strided lattice indices of the window positions, shape (P, 4)."""
        axes = [np.arange(0, n, s) for n, s in zip(self.signal_lattice.dims, self.stride)]
        return np.array(list(product(*axes)), dtype=np.int64)

    def position_coords(self) -> np.ndarray:
        """Window positions in lattice coordinates, shape (P, 4)."""
        idx = self.position_indices()
        centers = np.array([n // 2 for n in self.signal_lattice.dims])
        return (idx - centers) * np.array(self.signal_lattice.delta)

    @property
    def x_cell_measure(self) -> float:
        return float(np.prod([s * d for s, d in zip(self.stride, self.signal_lattice.delta)]))

    @property
    def xi_cell_measure(self) -> float:
        p = self.params
        return p.pair1.sin_gamma**2 * p.pair2.sin_gamma**2 * self.base_freq.cell_measure

    @property
    def cell_measure(self) -> float:
        return self.x_cell_measure * self.xi_cell_measure

    def lp_norm(self, p: float) -> float:
        return array_lp_norm(self.values, self.cell_measure, p)

    def spectrum_at(self, flat_position: int) -> SpectrumField:
        return SpectrumField(
            self.base_freq, self.params, self.values[flat_position], self.signal_lattice.delta
        )


def shift_window(garr: np.ndarray, lattice: Lattice, idx) -> np.ndarray:
    """Samples of g(t - x) for the position with lattice index ``idx``.

    The position coordinate is x = (idx - floor(N/2)) * delta per axis, and
    the shift is circular on the sampled torus.
    """
    centered = tuple(int(i) - n // 2 for i, n in zip(idx, lattice.dims))
    return np.roll(garr, shift=centered, axis=(0, 1, 2, 3))


def windowed_product(f: QSignal4, g, idx) -> QSignal4:
    """The localized signal t -> f(t) * conj(g(t - x)) at position index idx."""
    win = _as_window(g)
    if f.lattice != win.lattice:
        raise ValueError("signal and window must share a lattice")
    gbar = shift_window(qconj(win.signal.data), f.lattice, idx)
    return QSignal4(f.lattice, qmul(f.data, gbar))


def stqcfrft_compute(
    f: QSignal4, g, p: ParamSet, stride: tuple[int, int, int, int] = (1, 1, 1, 1)
) -> TimeFreqField:
    """Windowed transform of f against window g at every strided position.

    The integrand order is kernel_i * f * conj(g(. - x)) * kernel_j; the
    window is shifted with circular indexing on the sampled torus.
    """
    win = _as_window(g)
    if f.lattice != win.lattice:
        raise ValueError("signal and window must share a lattice")
    stride = tuple(int(s) for s in stride)
    if len(stride) != 4 or any(s < 1 for s in stride):
        raise ValueError(f"stride must be four positive integers, got {stride}")
    gbar = qconj(win.signal.data)
    freq = f.lattice.freq()
    axes_idx = [range(0, n, s) for n, s in zip(f.lattice.dims, stride)]
    n_pos = int(np.prod([len(r) for r in axes_idx]))
    values = np.empty((n_pos,) + freq.dims + (4,))
    for flat, idx in enumerate(product(*axes_idx)):
        shifted = shift_window(gbar, f.lattice, idx)
        c1, c2 = symplectic_split(qmul(f.data, shifted))
        s1, s2 = _qcfrft_fast_split(c1, c2, f.lattice, p)
        values[flat] = symplectic_join(s1, s2)
    return TimeFreqField(f.lattice, stride, freq, p, values)


def stqcfrft_reconstruct(S: TimeFreqField, g) -> QSignal4:
    """Invert a stride-1 field back to the analyzed signal.

    f(t) = (1/||g||_2^2) sum_x sum_xi conj(K_i) S(x, xi) conj(K_j) g(t - x)
           * xi-cell * x-cell.
    The 1/||g||_2^2 normalizer makes the synthesis exact for any window,
    not only unit-norm ones.
    """
    win = _as_window(g)
    if S.stride != (1, 1, 1, 1):
        raise ValueError(f"reconstruction requires stride (1, 1, 1, 1), got {S.stride}")
    if win.lattice != S.signal_lattice:
        raise ValueError("window lattice does not match the field's signal lattice")
    lattice = S.signal_lattice
    accum = np.zeros(lattice.dims + (4,))
    for flat, idx in enumerate(product(*[range(n) for n in lattice.dims])):
        inv = qcfrft_inverse(S.spectrum_at(flat))
        shifted = shift_window(win.signal.data, lattice, idx)
        accum += qmul(inv.data, shifted)
    accum *= S.x_cell_measure / lp_norm(win.signal, 2) ** 2
    return QSignal4(lattice, accum)


def translation_xi_shift(p: ParamSet, l) -> np.ndarray:
    """Frequency displacement matching a translation of the signal by l.

    Shifting f by l multiplies the transform by unit phases and displaces
    the frequency argument: |S(tau_l f)(x, xi)| = |S f(x - l, xi - shift)|
    with shift = (2 a1 Minv1 l1, 2 a2 Minv2 l2).  The chirp-free case
    (gamma = pi/2, a = 0) has zero shift: plain translation covariance.
    """
    l = np.asarray(l, dtype=np.float64)
    if l.shape != (4,):
        raise ValueError("l must be a 4-vector")
    out = np.empty(4)
    out[0:2] = 2.0 * p.pair1.a * (p.pair1.Minv @ l[0:2])
    out[2:4] = 2.0 * p.pair2.a * (p.pair2.Minv @ l[2:4])
    return out
