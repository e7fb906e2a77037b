import numpy as np
import pytest

from qcfrft import Lattice, QSignal4, derive_params


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


@pytest.fixture
def lat6():
    return Lattice((6, 6, 6, 6), (1.0, 1.0, 1.0, 1.0))


@pytest.fixture
def params_generic():
    return derive_params(0.9, 0.4, 1.7, -0.6)


@pytest.fixture
def params_qft():
    return derive_params(np.pi / 2, np.pi / 2, np.pi / 2, np.pi / 2)


def enveloped(lattice: Lattice, rng: np.random.Generator) -> QSignal4:
    g = lattice.grid()
    env = np.exp(-0.5 * (g[0] ** 2 + g[1] ** 2 + g[2] ** 2 + g[3] ** 2))
    return QSignal4(lattice, rng.standard_normal(lattice.dims + (4,)) * env[..., None])


def scaled_max_err(got: np.ndarray, ref: np.ndarray) -> float:
    peak = float(np.abs(ref).max())
    return float(np.abs(got - ref).max()) / (peak if peak > 0 else 1.0)
