"""Coupled angle pairs, their derived kernel constants, and the two
chirped kernels of the transform.

Each angle pair (alpha, beta) enters only through gamma = (alpha+beta)/2
and delta = (alpha-beta)/2.  Pair 1 drives the left kernel in the {1, i}
plane, pair 2 the right kernel in the {1, j} plane.  The kernels are

    K_u(t, xi) = d * exp(-u * (a*(|t|^2 + |xi|^2) - t . M xi)),  u in {i, j}

with a = cos(gamma)/2, d = u*exp(-u*gamma)/(2*pi*sin(gamma)) and the
mixing matrix M = [[b, c], [-c, b]], b = cos(delta)/sin(gamma),
c = sin(delta)/sin(gamma).  Validity requires alpha + beta not a multiple
of 2*pi; numerically, |sin(gamma)| > 1e-12.

Everything here is pure and operates on immutable parameter sets, so the
functions are thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import from_complex_i, from_complex_j

__all__ = [
    "InvalidAngles",
    "PlanePair",
    "ParamSet",
    "derive_params",
    "kernel_i",
    "kernel_j",
    "kernel_phase",
    "kernel_shift_phase",
    "kernel_shift_factor",
    "frft_kernel_1d",
]

SIN_GAMMA_FLOOR = 1e-12


class InvalidAngles(ValueError):
    """Raised when alpha + beta falls on a multiple of 2*pi."""


@dataclass(frozen=True)
class PlanePair:
    """Derived constants for one coupled angle pair."""

    alpha: float
    beta: float
    gamma: float
    delta: float
    a: float
    b: float
    c: float
    d: complex          # kernel constant, as an abstract complex number
    d0: complex         # 2*pi * d
    M: np.ndarray       # 2x2 mixing matrix
    Minv: np.ndarray
    detM: float

    @property
    def sin_gamma(self) -> float:
        return float(np.sin(self.gamma))


def _derive_pair(alpha: float, beta: float, kernel_scale: float) -> PlanePair:
    gamma = 0.5 * (alpha + beta)
    delta = 0.5 * (alpha - beta)
    sg = np.sin(gamma)
    if abs(sg) <= SIN_GAMMA_FLOOR:
        raise InvalidAngles(
            f"alpha + beta = {alpha + beta!r} is (numerically) a multiple of 2*pi; "
            "the transform is singular there"
        )
    a = 0.5 * np.cos(gamma)
    b = np.cos(delta) / sg
    c = np.sin(delta) / sg
    d = kernel_scale * 1j * np.exp(-1j * gamma) / (2.0 * np.pi * sg)
    M = np.array([[b, c], [-c, b]], dtype=np.float64)
    detM = b * b + c * c
    Minv = np.array([[b, -c], [c, b]], dtype=np.float64) / detM
    return PlanePair(
        alpha=float(alpha), beta=float(beta), gamma=float(gamma), delta=float(delta),
        a=float(a), b=float(b), c=float(c), d=complex(d), d0=complex(2.0 * np.pi * d),
        M=M, Minv=Minv, detM=float(detM),
    )


@dataclass(frozen=True)
class ParamSet:
    """Validated coupled angles with every derived kernel constant."""

    pair1: PlanePair
    pair2: PlanePair

    @property
    def angles(self) -> tuple[float, float, float, float]:
        return (self.pair1.alpha, self.pair1.beta, self.pair2.alpha, self.pair2.beta)

    @property
    def abs_sin_product(self) -> float:
        return abs(self.pair1.sin_gamma) * abs(self.pair2.sin_gamma)

    def pair(self, block: int) -> PlanePair:
        return self.pair1 if block == 0 else self.pair2


def derive_params(
    alpha1: float, beta1: float, alpha2: float, beta2: float,
    kernel_scale: float = 1.0,
) -> ParamSet:
    """Build a ParamSet from the four coupled angles (radians).

    ``kernel_scale`` is a fault-injection hook used by the verification
    suite's negative control: it multiplies the first kernel constant so
    that identity checks must detect the corruption.  Leave it at 1.0.
    """
    return ParamSet(
        pair1=_derive_pair(alpha1, beta1, kernel_scale),
        pair2=_derive_pair(alpha2, beta2, 1.0),
    )


def kernel_phase(pair: PlanePair, t: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """Complex-plane kernel values d * exp(-1j * phase) for 2-vectors t, xi.

    Broadcasts over leading axes of t and xi (each shaped (..., 2)).
    """
    t = np.asarray(t, dtype=np.float64)
    xi = np.asarray(xi, dtype=np.float64)
    mxi = xi @ pair.M.T  # (M xi)_r = M[r, s] xi_s
    phase = pair.a * ((t * t).sum(-1) + (xi * xi).sum(-1)) - (t * mxi).sum(-1)
    return pair.d * np.exp(-1j * phase)


def kernel_i(p: ParamSet, t1, xi1) -> np.ndarray:
    """Left kernel as quaternions in the {1, i} subalgebra."""
    return from_complex_i(kernel_phase(p.pair1, t1, xi1))


def kernel_j(p: ParamSet, t2, xi2) -> np.ndarray:
    """Right kernel as quaternions in the {1, j} subalgebra."""
    return from_complex_j(kernel_phase(p.pair2, t2, xi2))


def kernel_shift_phase(pair: PlanePair, k, t, xi) -> np.ndarray:
    """Complex-plane factor relating K(t + k, xi) to K(t, xi).

    K(t + k, xi) = exp(-u * (a*(|k|^2 + 2 t.k) - k . M xi)) * K(t, xi).
    The |k|^2 is genuinely squared: expanding |t + k|^2 under the kernel's
    quadratic term leaves |k|^2 + 2 t.k after the square is completed.
    """
    k = np.asarray(k, dtype=np.float64)
    t = np.asarray(t, dtype=np.float64)
    xi = np.asarray(xi, dtype=np.float64)
    mxi = xi @ pair.M.T
    phase = pair.a * ((k * k).sum(-1) + 2.0 * (t * k).sum(-1)) - (k * mxi).sum(-1)
    return np.exp(-1j * phase)


def kernel_shift_factor(p: ParamSet, side: str, k, t, xi) -> np.ndarray:
    """Quaternion shift factor for side 'i' (left kernel) or 'j' (right)."""
    if side == "i":
        return from_complex_i(kernel_shift_phase(p.pair1, k, t, xi))
    if side == "j":
        return from_complex_j(kernel_shift_phase(p.pair2, k, t, xi))
    raise ValueError(f"side must be 'i' or 'j', got {side!r}")


def frft_kernel_1d(gamma: float, t, xi) -> np.ndarray:
    """One-dimensional fractional kernel whose two-fold tensor product
    reproduces the 2-D block kernel at alpha = beta (delta = 0).

    Complex-valued: sqrt(d(gamma)) * exp(-1j*(cos(gamma)/2*(t^2+xi^2) - t*xi/sin(gamma))).
    The square root takes the principal branch of the constant's argument.
    """
    sg = np.sin(gamma)
    if abs(sg) <= SIN_GAMMA_FLOOR:
        raise InvalidAngles(f"gamma = {gamma!r} is singular")
    d = 1j * np.exp(-1j * gamma) / (2.0 * np.pi * sg)
    droot = np.sqrt(abs(d)) * np.exp(0.5j * np.angle(d))
    t = np.asarray(t, dtype=np.float64)
    xi = np.asarray(xi, dtype=np.float64)
    phase = 0.5 * np.cos(gamma) * (t * t + xi * xi) - t * xi / sg
    return droot * np.exp(-1j * phase)
