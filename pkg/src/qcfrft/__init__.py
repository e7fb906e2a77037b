"""Two-sided quaternion coupled fractional Fourier transform toolkit.

Sampled 4-D quaternion signals on centered lattices, the coupled
fractional transform and its short-time variant with exactly invertible
discrete fast paths, closed-form oracles, and a verification suite for
the identities and inequalities the transform satisfies.
"""

from .algebra import (
    Quaternion,
    qconj,
    qmodulus,
    qmul,
    quat,
    scalar_part,
    symplectic_join,
    symplectic_split,
)
from .analysis import (
    DensityField,
    InequalityReport,
    ap_constant,
    concentration_support,
    hy_check,
    lieb_inequality_report,
    lieb_support_report,
    normalize_l2,
    renyi_entropy,
    renyi_up_report,
    shannon_entropy,
    shannon_up_report,
    stqcfrft_entropy_report,
    support_bound_constant,
)
from .closedform import (
    box_window_signal,
    box_window_stqcfrft,
    cerf,
    chirped_gaussian_signal,
    gaussian_qcfrft,
    gaussian_signal,
)
from .fractional import (
    SpectrumField,
    qcfrft_direct,
    qcfrft_fast,
    qcfrft_inverse,
    qcfrft_inverse_direct,
)
from .grids import FreqLattice, Lattice
from .params import (
    InvalidAngles,
    ParamSet,
    derive_params,
    kernel_i,
    kernel_j,
    kernel_shift_factor,
)
from .qft import QSpectrum, qft_direct, qft_fast, qft_inverse
from .shorttime import (
    TimeFreqField,
    Window,
    stqcfrft_compute,
    stqcfrft_reconstruct,
    translation_xi_shift,
)
from .signal import QSignal4, inner_product, lp_norm, sc_inner

__version__ = "0.1.0"

__all__ = [
    "Quaternion", "quat", "qmul", "qconj", "qmodulus", "scalar_part",
    "symplectic_split", "symplectic_join",
    "Lattice", "FreqLattice", "QSignal4", "lp_norm", "inner_product", "sc_inner",
    "InvalidAngles", "ParamSet", "derive_params", "kernel_i", "kernel_j",
    "kernel_shift_factor",
    "QSpectrum", "qft_direct", "qft_fast", "qft_inverse",
    "SpectrumField", "qcfrft_direct", "qcfrft_fast", "qcfrft_inverse",
    "qcfrft_inverse_direct",
    "Window", "TimeFreqField", "stqcfrft_compute", "stqcfrft_reconstruct",
    "translation_xi_shift",
    "InequalityReport", "DensityField", "ap_constant", "hy_check",
    "renyi_entropy", "shannon_entropy", "renyi_up_report", "shannon_up_report",
    "lieb_inequality_report", "concentration_support", "support_bound_constant",
    "lieb_support_report", "stqcfrft_entropy_report", "normalize_l2",
    "cerf", "gaussian_qcfrft", "box_window_stqcfrft",
    "chirped_gaussian_signal", "gaussian_signal", "box_window_signal",
    "__version__",
]
