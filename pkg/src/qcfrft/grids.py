"""Centered uniform sampling lattices in time and frequency.

The time lattice places sample n at (n - floor(N/2)) * delta along each
axis, so it always contains the origin; even sample counts put one extra
point on the negative side.  The matching frequency lattice uses
du = 2*pi / (N * delta), which makes the centered discrete transform an
exactly invertible composition of diagonal phases and DFTs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["Lattice", "FreqLattice"]


def _validate(dims, delta):
    dims = tuple(int(n) for n in dims)
    delta = tuple(float(d) for d in delta)
    if len(dims) != 4 or len(delta) != 4:
        raise ValueError("expected four axes")
    if any(n <= 0 for n in dims):
        raise ValueError(f"sample counts must be positive, got {dims}")
    if any(d <= 0 for d in delta):
        raise ValueError(f"spacings must be positive, got {delta}")
    return dims, delta


@dataclass(frozen=True)
class Lattice:
    """Centered uniform 4-D sampling lattice: sample counts and spacings."""

    dims: tuple[int, int, int, int]
    delta: tuple[float, float, float, float]

    def __post_init__(self):
        dims, delta = _validate(self.dims, self.delta)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "delta", delta)

    @property
    def size(self) -> int:
        return int(np.prod(self.dims))

    @property
    def cell_measure(self) -> float:
        return float(np.prod(self.delta))

    def coords(self, axis: int) -> np.ndarray:
        """Sample coordinates along one axis, origin included."""
        n = self.dims[axis]
        return (np.arange(n) - n // 2) * self.delta[axis]

    def grid(self) -> list[np.ndarray]:
        """Open-meshgrid coordinate arrays, broadcastable to ``dims``."""
        return list(np.meshgrid(*(self.coords(a) for a in range(4)), indexing="ij", sparse=True))

    def block_coords(self, block: int) -> np.ndarray:
        """Flattened 2-vector coordinates of one 2-D block.

        Block 0 covers axes (0, 1), block 1 covers axes (2, 3); rows are in
        C order (second axis fastest), matching a reshape to (N_a*N_b, ...).
        """
        a, b = (0, 1) if block == 0 else (2, 3)
        ca, cb = self.coords(a), self.coords(b)
        return np.stack(
            [np.repeat(ca, len(cb)), np.tile(cb, len(ca))], axis=1
        )

    def freq(self) -> "FreqLattice":
        du = tuple(2.0 * np.pi / (n * d) for n, d in zip(self.dims, self.delta))
        return FreqLattice(self.dims, du)


@dataclass(frozen=True)
class FreqLattice:
    """Centered frequency lattice induced by a time lattice.

    Satisfies du_a * delta_a * N_a = 2*pi exactly as computed, which is what
    makes the discrete two-sided transform exactly invertible.
    """

    dims: tuple[int, int, int, int]
    du: tuple[float, float, float, float]

    def __post_init__(self):
        dims, du = _validate(self.dims, self.du)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "du", du)

    @property
    def size(self) -> int:
        return int(np.prod(self.dims))

    @property
    def cell_measure(self) -> float:
        return float(np.prod(self.du))

    def coords(self, axis: int) -> np.ndarray:
        n = self.dims[axis]
        return (np.arange(n) - n // 2) * self.du[axis]

    def grid(self) -> list[np.ndarray]:
        return list(np.meshgrid(*(self.coords(a) for a in range(4)), indexing="ij", sparse=True))

    def block_coords(self, block: int) -> np.ndarray:
        a, b = (0, 1) if block == 0 else (2, 3)
        ca, cb = self.coords(a), self.coords(b)
        return np.stack(
            [np.repeat(ca, len(cb)), np.tile(cb, len(ca))], axis=1
        )
