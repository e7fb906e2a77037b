"""Hamilton quaternion arithmetic on (..., 4) float64 component arrays.

A quaternion q = w + x*i + y*j + z*k is stored as the last-axis quadruple
(w, x, y, z).  All functions broadcast over leading axes, so a single
quaternion is a shape-(4,) array and a sampled field is (..., 4).

The symplectic split writes q = c1 + c2*j with c1 = w + x*i and
c2 = y + z*i, both living in the commutative plane spanned by {1, i}.
It is the bridge between two-sided quaternion transforms and pairs of
complex FFTs.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "Quaternion",
    "quat",
    "qmul",
    "qconj",
    "qmodulus",
    "scalar_part",
    "symplectic_split",
    "symplectic_join",
    "from_complex_i",
    "from_complex_j",
]


class Quaternion(NamedTuple):
    """One Hamilton-algebra element, the scalar sample type everywhere."""

    w: float
    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array(self, dtype=np.float64)

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        a = np.asarray(a, dtype=np.float64)
        if a.shape != (4,):
            raise ValueError(f"expected shape (4,), got {a.shape}")
        return cls(float(a[0]), float(a[1]), float(a[2]), float(a[3]))

    def __mul__(self, other):  # Hamilton product
        if isinstance(other, Quaternion):
            return Quaternion.from_array(qmul(self.as_array(), other.as_array()))
        return Quaternion(*(float(other) * c for c in self))

    __rmul__ = __mul__

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(*(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(*(-c for c in self))

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def modulus(self) -> float:
        return float(np.sqrt(self.w**2 + self.x**2 + self.y**2 + self.z**2))


def quat(w=0.0, x=0.0, y=0.0, z=0.0) -> np.ndarray:
    """Shape-(4,) quaternion array from components."""
    return np.array([w, x, y, z], dtype=np.float64)


def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product, broadcasting over leading axes.

    Non-commutative; |qmul(a, b)| = |a| |b| up to rounding.
    """
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    aw, ax, ay, az = a[..., 0], a[..., 1], a[..., 2], a[..., 3]
    bw, bx, by, bz = b[..., 0], b[..., 1], b[..., 2], b[..., 3]
    out = np.empty(np.broadcast_shapes(a.shape, b.shape), dtype=np.float64)
    out[..., 0] = aw * bw - ax * bx - ay * by - az * bz
    out[..., 1] = aw * bx + ax * bw + ay * bz - az * by
    out[..., 2] = aw * by - ax * bz + ay * bw + az * bx
    out[..., 3] = aw * bz + ax * by - ay * bx + az * bw
    return out


def qconj(q: np.ndarray) -> np.ndarray:
    """Quaternion conjugate: sign flip of the i, j, k components."""
    q = np.asarray(q, dtype=np.float64)
    out = q.copy()
    out[..., 1:] = -out[..., 1:]
    return out


def qmodulus(q: np.ndarray) -> np.ndarray:
    """|q| = sqrt(w^2 + x^2 + y^2 + z^2), elementwise over leading axes."""
    q = np.asarray(q, dtype=np.float64)
    return np.sqrt(np.sum(q * q, axis=-1))


def scalar_part(q: np.ndarray) -> np.ndarray:
    """Sc(q) = w.  Satisfies the cyclic symmetry Sc(qrs) = Sc(sqr)."""
    return np.asarray(q, dtype=np.float64)[..., 0]


def symplectic_split(q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split q = c1 + c2*j into the i-complex pair (c1, c2).

    c1 = w + x*1j and c2 = y + z*1j; the round trip through
    ``symplectic_join`` is bitwise exact.
    """
    q = np.asarray(q, dtype=np.float64)
    c1 = q[..., 0] + 1j * q[..., 1]
    c2 = q[..., 2] + 1j * q[..., 3]
    return c1, c2


def symplectic_join(c1: np.ndarray, c2: np.ndarray) -> np.ndarray:
    """Inverse of ``symplectic_split``."""
    c1 = np.asarray(c1, dtype=np.complex128)
    c2 = np.asarray(c2, dtype=np.complex128)
    out = np.empty(np.broadcast_shapes(c1.shape, c2.shape) + (4,), dtype=np.float64)
    out[..., 0] = c1.real
    out[..., 1] = c1.imag
    out[..., 2] = c2.real
    out[..., 3] = c2.imag
    return out


def from_complex_i(c: np.ndarray) -> np.ndarray:
    """Embed an abstract complex value into the {1, i} subalgebra."""
    c = np.asarray(c, dtype=np.complex128)
    out = np.zeros(c.shape + (4,), dtype=np.float64)
    out[..., 0] = c.real
    out[..., 1] = c.imag
    return out


def from_complex_j(c: np.ndarray) -> np.ndarray:
    """Embed an abstract complex value into the {1, j} subalgebra."""
    c = np.asarray(c, dtype=np.complex128)
    out = np.zeros(c.shape + (4,), dtype=np.float64)
    out[..., 0] = c.real
    out[..., 2] = c.imag
    return out
