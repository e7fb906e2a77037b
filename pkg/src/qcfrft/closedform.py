"""Analytic oracles: the chirped-Gaussian spectrum, the erf-based
box-window time-frequency values, and the complex error function they need.

The error function is built from two classical pieces so the oracle has no
special-function dependency: the Maclaurin series where cancellation is
controlled, and the Stieltjes continued fraction for erfc elsewhere.  The
box-window value is derived by completing the square in each 1-D factor;
the erf offset that falls out is u*C/(2*sqrt(1 + u*a)) with u the acting
imaginary unit and C the linear phase coefficient of that factor.
"""

from __future__ import annotations

import numpy as np

from .algebra import from_complex_i, from_complex_j, qmul, symplectic_join
from .grids import Lattice
from .params import ParamSet, PlanePair
from .signal import QSignal4

__all__ = [
    "cerf",
    "gaussian_qcfrft",
    "box_window_stqcfrft",
    "chirped_gaussian_signal",
    "gaussian_signal",
    "box_window_signal",
]

CERF_MAX_ABS = 12.0
_TAYLOR_RADIUS = 3.5      # plain radius where the series stays well conditioned
_TAYLOR_RE_MAX = 2.4      # cancellation grows like e^{2 Re(z)^2}; keep it < ~1e5
_TWO_OVER_SQRT_PI = 2.0 / np.sqrt(np.pi)


def _cerf_taylor(z: complex) -> complex:
    # erf(z) = 2/sqrt(pi) * sum (-1)^n z^(2n+1) / (n! (2n+1)), Kahan-compensated.
    term = z
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    zz = -(z * z)
    for n in range(600):
        y = term - comp
        t = total + y
        comp = (t - total) - y
        total = t
        term = term * zz * (2 * n + 1) / ((n + 1) * (2 * n + 3))
        if abs(term) <= 1e-18 * max(1.0, abs(total)):
            break
    return _TWO_OVER_SQRT_PI * total


def _erfc_cf(z: complex, max_iter: int = 300) -> complex:
    # sqrt(pi) e^{z^2} erfc(z) = 1/(z + (1/2)/(z + 1/(z + (3/2)/(z + ...))))
    # evaluated with the modified Lentz algorithm; valid for Re(z) > 0.
    tiny = 1e-300
    f = z if z != 0 else tiny
    c = f
    d = 0.0 + 0.0j
    for k in range(1, max_iter + 1):
        a = 0.5 * k
        d = z + a * d
        if d == 0:
            d = tiny
        c = z + a / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f = f * delta
        if abs(delta - 1.0) < 1e-16:
            break
    return np.exp(-z * z) / (np.sqrt(np.pi) * f)


def _cerf_scalar(z: complex) -> complex:
    if abs(z) > CERF_MAX_ABS:
        raise ValueError(f"|z| = {abs(z):.3f} outside the supported region |z| <= {CERF_MAX_ABS}")
    # odd in z, conjugate-symmetric: reduce to Re(z) >= 0, Im(z) >= 0.
    sign = 1.0
    if z.real < 0:
        z = -z
        sign = -sign
    conj = z.imag < 0
    if conj:
        z = np.conj(z)
    if abs(z) <= _TAYLOR_RADIUS or z.real <= _TAYLOR_RE_MAX:
        w = _cerf_taylor(z)
    else:
        w = 1.0 - _erfc_cf(z)
    if conj:
        w = np.conj(w)
    return sign * w


def cerf(z) -> complex | np.ndarray:
    """Entire error function for complex argument, |z| <= 12.

    Odd, conjugate-symmetric; scaled error below 1e-10 against an
    extended-precision reference on the supported region.
    """
    arr = np.asarray(z, dtype=np.complex128)
    if arr.ndim == 0:
        return _cerf_scalar(complex(arr))
    out = np.empty(arr.shape, dtype=np.complex128)
    flat_in = arr.ravel()
    flat_out = out.ravel()
    for idx in range(flat_in.size):
        flat_out[idx] = _cerf_scalar(complex(flat_in[idx]))
    return out


def gaussian_qcfrft(p: ParamSet, A: float, B: float, xi) -> np.ndarray:
    """Spectrum of the chirped Gaussian e^{i a1 |t1|^2} e^{-A|t1|^2 - B|t2|^2} e^{j a2 |t2|^2}.

    Closed form: (1/(4AB)) d0(g1) e^{-i a1 |xi1|^2}
                 e^{-(|M1 xi1|^2 / A + |M2 xi2|^2 / B)/4}
                 d0(g2) e^{-j a2 |xi2|^2}.
    """
    if A <= 0 or B <= 0:
        raise ValueError(f"A and B must be positive, got A={A}, B={B}")
    xi = np.asarray(xi, dtype=np.float64)
    xi1, xi2 = xi[..., 0:2], xi[..., 2:4]
    m1 = xi1 @ p.pair1.M.T
    m2 = xi2 @ p.pair2.M.T
    gauss = np.exp(-((m1 * m1).sum(-1) / A + (m2 * m2).sum(-1) / B) / 4.0) / (4.0 * A * B)
    ci = p.pair1.d0 * np.exp(-1j * p.pair1.a * (xi1 * xi1).sum(-1)) * gauss
    cj = p.pair2.d0 * np.exp(-1j * p.pair2.a * (xi2 * xi2).sum(-1))
    return qmul(from_complex_i(ci), from_complex_j(cj))


def _box_factor_1d(pair: PlanePair, lo: float, hi: float, c_lin: float, xi_k: float) -> complex:
    """One 1-D window-box factor of the example, by completing the square.

    integral_lo^hi e^{-u(a(t^2 + xi_k^2) - t*C)} e^{-t^2} dt in the
    commutative plane of the unit u, with C the linear coefficient:
    = e^{-u a xi_k^2} e^{-C^2/(4(1+u a))} sqrt(pi)/(2 A)
      [cerf(A hi - D) - cerf(A lo - D)],  A = sqrt(1 + u a), D = u C/(2 A).
    """
    a = pair.a
    one_ua = 1.0 + 1j * a
    A = np.sqrt(one_ua)  # principal branch; Re > 0 since Re(1 + ua) = 1
    D = 1j * c_lin / (2.0 * A)
    pref = (
        np.exp(-1j * a * xi_k**2)
        * np.exp(-(c_lin**2) / (4.0 * one_ua))
        * np.sqrt(np.pi)
        / (2.0 * A)
    )
    return pref * (cerf(A * hi - D) - cerf(A * lo - D))


def _box_block(pair: PlanePair, lo, hi, xi_block) -> complex:
    """Product of the two 1-D factors of one 2-D block, times the kernel constant."""
    b, c = pair.b, pair.c
    c1 = b * xi_block[0] + c * xi_block[1]
    c2 = -c * xi_block[0] + b * xi_block[1]
    return (
        pair.d
        * _box_factor_1d(pair, lo[0], hi[0], c1, xi_block[0])
        * _box_factor_1d(pair, lo[1], hi[1], c2, xi_block[1])
    )


def box_window_stqcfrft(p: ParamSet, x, xi) -> np.ndarray:
    """Windowed-transform value of the Gaussian e^{-(|t1|^2+|t2|^2)} against
    the bipolar unit box window, at window position x and frequency xi.

    The window contributes +1 on [x, x+1/2)^4 and -1 on [x+1/2, x+1)^4, so
    the value is a difference of two separable erf products: the i-plane
    block (axes 1, 2) multiplies from the left, the j-plane block (axes 3, 4)
    from the right.
    """
    x = np.asarray(x, dtype=np.float64)
    xi = np.asarray(xi, dtype=np.float64)
    if x.shape != (4,) or xi.shape != (4,):
        raise ValueError("x and xi must be 4-vectors")
    val = np.zeros(4)
    for sign, off_lo, off_hi in ((1.0, 0.0, 0.5), (-1.0, 0.5, 1.0)):
        blk_i = _box_block(p.pair1, x[0:2] + off_lo, x[0:2] + off_hi, xi[0:2])
        blk_j = _box_block(p.pair2, x[2:4] + off_lo, x[2:4] + off_hi, xi[2:4])
        val = val + sign * qmul(from_complex_i(blk_i), from_complex_j(blk_j))
    return val


def chirped_gaussian_signal(lattice: Lattice, p: ParamSet, A: float, B: float) -> QSignal4:
    """Sampled e^{i a1 |t1|^2} e^{-A|t1|^2 - B|t2|^2} e^{j a2 |t2|^2}."""
    if A <= 0 or B <= 0:
        raise ValueError(f"A and B must be positive, got A={A}, B={B}")
    g = lattice.grid()
    t1sq = g[0] ** 2 + g[1] ** 2
    t2sq = g[2] ** 2 + g[3] ** 2
    left = np.exp(1j * p.pair1.a * t1sq) * np.exp(-A * t1sq - B * t2sq)
    right = np.exp(1j * p.pair2.a * t2sq)
    return QSignal4(lattice, symplectic_join(left * right.real, left * right.imag))


def gaussian_signal(lattice: Lattice, width: float = 1.0) -> QSignal4:
    """Real Gaussian e^{-width |t|^2} as a quaternion signal."""
    g = lattice.grid()
    rsq = g[0] ** 2 + g[1] ** 2 + g[2] ** 2 + g[3] ** 2
    data = np.zeros(lattice.dims + (4,))
    data[..., 0] = np.exp(-width * rsq)
    return QSignal4(lattice, data)


def box_window_signal(lattice: Lattice) -> QSignal4:
    """The example's bipolar window: +1 on [0, 1/2)^4, -1 on [1/2, 1)^4."""
    g = lattice.grid()
    pos = np.ones(lattice.dims, dtype=bool)
    neg = np.ones(lattice.dims, dtype=bool)
    for axis in range(4):
        t = g[axis]
        pos &= (t >= 0.0) & (t < 0.5)
        neg &= (t >= 0.5) & (t < 1.0)
    data = np.zeros(lattice.dims + (4,))
    data[..., 0] = pos.astype(float) - neg.astype(float)
    return QSignal4(lattice, data)
