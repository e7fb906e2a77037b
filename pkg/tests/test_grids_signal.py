import numpy as np
import pytest

from qcfrft import Lattice, QSignal4, inner_product, lp_norm, sc_inner
from qcfrft.algebra import quat

from conftest import enveloped


def test_lattice_centering_even_and_odd():
    lat = Lattice((4, 5, 4, 5), (0.5, 1.0, 2.0, 0.25))
    np.testing.assert_allclose(lat.coords(0), [-1.0, -0.5, 0.0, 0.5])
    np.testing.assert_allclose(lat.coords(1), [-2.0, -1.0, 0.0, 1.0, 2.0])
    assert 0.0 in lat.coords(2)
    assert lat.cell_measure == 0.5 * 1.0 * 2.0 * 0.25


def test_lattice_validation():
    with pytest.raises(ValueError):
        Lattice((0, 4, 4, 4), (1, 1, 1, 1))
    with pytest.raises(ValueError):
        Lattice((4, 4, 4, 4), (1, -1, 1, 1))
    with pytest.raises(ValueError):
        Lattice((4, 4, 4), (1, 1, 1))


def test_freq_lattice_product_identity():
    lat = Lattice((6, 8, 5, 7), (0.3, 0.7, 1.1, 0.9))
    freq = lat.freq()
    for n, d, du in zip(lat.dims, lat.delta, freq.du):
        assert du * d * n == pytest.approx(2.0 * np.pi, rel=0, abs=0)


def test_signal_shape_and_finiteness():
    lat = Lattice((2, 2, 2, 2), (1, 1, 1, 1))
    with pytest.raises(ValueError):
        QSignal4(lat, np.zeros((2, 2, 2, 3, 4)))
    bad = np.zeros(lat.dims + (4,))
    bad[0, 0, 0, 0, 0] = np.nan
    with pytest.raises(ValueError):
        QSignal4(lat, bad)
    sig = QSignal4(lat, np.ones((lat.size, 4)))  # flat layout accepted
    assert sig.data.shape == lat.dims + (4,)
    with pytest.raises(ValueError):
        sig.data[0, 0, 0, 0, 0] = 2.0  # immutable after construction


def test_lp_norm_constant_signal():
    lat = Lattice((2, 2, 2, 2), (1, 1, 1, 1))
    data = np.zeros(lat.dims + (4,))
    data[..., 0] = 1.0
    f = QSignal4(lat, data)
    assert lp_norm(f, 2) == pytest.approx(4.0)          # (16 * 1)^(1/2)
    assert lp_norm(f, np.inf) == pytest.approx(1.0)
    assert lp_norm(f, 1) == pytest.approx(16.0)


def test_lp_norm_gaussian_analytic():
    # ||e^{-|t|^2}||_2 over R^4 is ((pi/2)^2)^(1/2) = pi/2
    lat = Lattice((16,) * 4, (0.5,) * 4)
    g = lat.grid()
    data = np.zeros(lat.dims + (4,))
    data[..., 0] = np.exp(-(g[0] ** 2 + g[1] ** 2 + g[2] ** 2 + g[3] ** 2))
    f = QSignal4(lat, data)
    assert lp_norm(f, 2) == pytest.approx(np.pi / 2.0, rel=1e-6)


def test_lp_norm_rejects_p_below_one(lat6):
    f = QSignal4(lat6, np.ones(lat6.dims + (4,)))
    with pytest.raises(ValueError):
        lp_norm(f, 0.5)


def test_lp_norm_homogeneity(rng, lat6):
    f = enveloped(lat6, rng)
    lam = -2.7
    g = QSignal4(lat6, lam * f.data)
    for p in (1, 2, 3.5, np.inf):
        assert lp_norm(g, p) == pytest.approx(abs(lam) * lp_norm(f, p), rel=1e-12)


def test_inner_product_constant_i_single_cell():
    lat = Lattice((1, 1, 1, 1), (1, 1, 1, 1))
    f = QSignal4(lat, quat(0, 1, 0, 0).reshape(1, 1, 1, 1, 4))
    val = inner_product(f, f)
    np.testing.assert_allclose(val, quat(1, 0, 0, 0), atol=0)


def test_inner_product_disjoint_supports():
    lat = Lattice((2, 1, 1, 1), (1, 1, 1, 1))
    a = np.zeros(lat.dims + (4,))
    b = np.zeros(lat.dims + (4,))
    a[0, ..., 1] = 1.0
    b[1, ..., 2] = 1.0
    assert np.all(inner_product(QSignal4(lat, a), QSignal4(lat, b)) == 0.0)


def test_sc_inner_matches_norm_squared(rng, lat6):
    for _ in range(5):
        f = enveloped(lat6, rng)
        assert sc_inner(f, f) == pytest.approx(lp_norm(f, 2) ** 2, rel=1e-12)


def test_inner_product_lattice_mismatch(rng):
    a = Lattice((2, 2, 2, 2), (1, 1, 1, 1))
    b = Lattice((2, 2, 2, 2), (1, 1, 1, 2))
    with pytest.raises(ValueError):
        inner_product(QSignal4(a, np.zeros(a.dims + (4,))), QSignal4(b, np.zeros(b.dims + (4,))))
