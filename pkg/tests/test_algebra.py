import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcfrft.algebra import (
    Quaternion,
    qconj,
    qmodulus,
    qmul,
    quat,
    scalar_part,
    symplectic_join,
    symplectic_split,
)

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
quats = st.builds(quat, finite, finite, finite, finite)

I = quat(0, 1, 0, 0)
J = quat(0, 0, 1, 0)
K = quat(0, 0, 0, 1)


def test_hamilton_table():
    one = quat(1, 0, 0, 0)
    np.testing.assert_array_equal(qmul(I, J), K)
    np.testing.assert_array_equal(qmul(J, I), -K)
    np.testing.assert_array_equal(qmul(J, K), I)
    np.testing.assert_array_equal(qmul(K, J), -I)
    np.testing.assert_array_equal(qmul(K, I), J)
    np.testing.assert_array_equal(qmul(I, K), -J)
    for u in (I, J, K):
        np.testing.assert_array_equal(qmul(u, u), -one)


def test_distributivity_example():
    # (1 + i)(1 + j) = 1 + i + j + k
    a = quat(1, 1, 0, 0)
    b = quat(1, 0, 1, 0)
    np.testing.assert_array_equal(qmul(a, b), quat(1, 1, 1, 1))


def test_conj_and_modulus_values():
    q = quat(1, 1, 1, 1)
    np.testing.assert_array_equal(qconj(q), quat(1, -1, -1, -1))
    assert qmodulus(q) == 2.0
    assert scalar_part(q) == 1.0


@given(quats, quats)
@settings(max_examples=200, deadline=None)
def test_modulus_multiplicative(a, b):
    lhs = qmodulus(qmul(a, b))
    rhs = qmodulus(a) * qmodulus(b)
    assert abs(lhs - rhs) <= 1e-12 * max(rhs, 1.0)


@given(quats, quats, quats)
@settings(max_examples=200, deadline=None)
def test_associativity(a, b, c):
    lhs = qmul(qmul(a, b), c)
    rhs = qmul(a, qmul(b, c))
    scale = max(qmodulus(a) * qmodulus(b) * qmodulus(c), 1.0)
    assert np.abs(lhs - rhs).max() <= 1e-12 * scale


@given(quats, quats)
@settings(max_examples=200, deadline=None)
def test_conj_antiautomorphism(a, b):
    # the true Hamilton identity: conj(ab) = conj(b) conj(a)
    lhs = qconj(qmul(a, b))
    rhs = qmul(qconj(b), qconj(a))
    scale = max(qmodulus(a) * qmodulus(b), 1.0)
    assert np.abs(lhs - rhs).max() <= 1e-12 * scale


@given(quats)
@settings(max_examples=200, deadline=None)
def test_conj_involution_bitwise(q):
    np.testing.assert_array_equal(qconj(qconj(q)), q)


def test_sc_cyclic_symmetry(rng):
    q, r, s = (rng.standard_normal((3, 50, 4)) * 3.0)
    qrs = scalar_part(qmul(qmul(q, r), s))
    sqr = scalar_part(qmul(qmul(s, q), r))
    rsq = scalar_part(qmul(qmul(r, s), q))
    scale = np.maximum(np.abs(qrs), 1.0)
    assert (np.abs(qrs - sqr) / scale).max() <= 1e-12
    assert (np.abs(qrs - rsq) / scale).max() <= 1e-12


def test_split_basis_values():
    c1, c2 = symplectic_split(J)
    assert (c1, c2) == (0j, 1 + 0j)
    c1, c2 = symplectic_split(quat(1, 1, 1, 1))
    assert (c1, c2) == (1 + 1j, 1 + 1j)


def test_split_join_roundtrip_bitwise(rng):
    q = rng.standard_normal((1000, 4))
    np.testing.assert_array_equal(symplectic_join(*symplectic_split(q)), q)


def test_right_j_multiplication_via_split(rng):
    # (c1 + c2 j)(wr + wi j) = (c1 wr - c2 wi) + (c1 wi + c2 wr) j
    q = rng.standard_normal((20, 4))
    w = np.zeros((20, 4))
    w[:, 0] = rng.standard_normal(20)
    w[:, 2] = rng.standard_normal(20)
    c1, c2 = symplectic_split(q)
    wr, wi = w[:, 0], w[:, 2]
    expected = symplectic_join(c1 * wr - c2 * wi, c1 * wi + c2 * wr)
    np.testing.assert_allclose(qmul(q, w), expected, atol=1e-14)


def test_scalar_quaternion_class():
    a = Quaternion(1.0, 2.0, 3.0, 4.0)
    b = Quaternion(2.0, 3.0, 4.0, 5.0)
    assert a * b != b * a
    assert (a * b).as_array() == pytest.approx(qmul(a.as_array(), b.as_array()))
    assert a.conj() == Quaternion(1.0, -2.0, -3.0, -4.0)
    assert a.modulus() == pytest.approx(np.sqrt(30.0))
    assert (a + b) - b == a
