"""Quaternion-valued fields sampled on a centered lattice, with the
quadrature norms and inner products built on the left-endpoint rule."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import qconj, qmodulus, qmul, scalar_part
from .grids import Lattice

__all__ = ["QSignal4", "lp_norm", "inner_product", "sc_inner"]


@dataclass(frozen=True)
class QSignal4:
    """Quaternion field on a 4-D lattice; data shape is dims + (4,).

    Immutable after construction (the component array is marked read-only),
    so instances are safe to share across threads.
    """

    lattice: Lattice
    data: np.ndarray

    def __post_init__(self):
        data = np.ascontiguousarray(self.data, dtype=np.float64)
        expected = self.lattice.dims + (4,)
        if data.shape == (self.lattice.size, 4):
            data = data.reshape(expected)
        if data.shape != expected:
            raise ValueError(f"data shape {data.shape} does not match lattice {expected}")
        if not np.all(np.isfinite(data)):
            raise ValueError("signal components must be finite")
        data.flags.writeable = False
        object.__setattr__(self, "data", data)

    @classmethod
    def zeros(cls, lattice: Lattice) -> "QSignal4":
        return cls(lattice, np.zeros(lattice.dims + (4,)))

    def components(self):
        """(w, x, y, z) component views."""
        return tuple(self.data[..., c] for c in range(4))


def lp_norm(f: QSignal4, p: float) -> float:
    """Quadrature L^p norm; p = inf gives the sample max (discrete ess sup)."""
    if p == np.inf:
        return float(qmodulus(f.data).max())
    p = float(p)
    if p < 1.0:
        raise ValueError(f"require p >= 1 or p = inf, got {p}")
    mags = qmodulus(f.data)
    return float(np.sum(mags**p) * f.lattice.cell_measure) ** (1.0 / p)


def inner_product(f: QSignal4, g: QSignal4) -> np.ndarray:
    """Quaternion-valued inner product  sum f(t) conj(g(t)) * cell."""
    if f.lattice != g.lattice:
        raise ValueError("inner product requires identical lattices")
    prod = qmul(f.data, qconj(g.data))
    return prod.reshape(-1, 4).sum(axis=0) * f.lattice.cell_measure


def sc_inner(f: QSignal4, g: QSignal4) -> float:
    """Scalar part of the quaternion inner product; sc_inner(f, f) = ||f||_2^2."""
    return float(scalar_part(inner_product(f, g)))
