"""Norm and entropy functionals, and numerical verdicts for the
inequalities satisfied by the transform.

Every check is packaged as an ``InequalityReport`` whose ``holds`` flag is
a pure function of (lhs, rhs, slack): margin = rhs - lhs for upper bounds,
lhs - rhs for lower bounds, and holds iff margin >= -slack.  Identity-type
reports keep the default relative slack; uncertainty-principle reports use
an absolute 1e-3 slack because they compare continuous differential
entropies approximated by lattice quadrature.

Natural logarithms throughout: the e^2/4 and e^4 constants demand base e.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .algebra import qmodulus
from .fractional import SpectrumField, qcfrft_fast
from .params import ParamSet
from .qft import array_lp_norm
from .shorttime import TimeFreqField, Window, stqcfrft_compute, _as_window
from .signal import QSignal4, lp_norm

__all__ = [
    "InequalityReport",
    "DensityField",
    "ap_constant",
    "hy_check",
    "renyi_entropy",
    "shannon_entropy",
    "renyi_up_report",
    "shannon_up_report",
    "lieb_inequality_report",
    "concentration_support",
    "support_bound_constant",
    "lieb_support_report",
    "stqcfrft_entropy_report",
    "normalize_l2",
]

UP_SLACK = 1e-3
MASS_TOL = 1e-9


def _default_slack(lhs: float, rhs: float) -> float:
    return 1e-9 * max(abs(lhs), abs(rhs), 1.0)


@dataclass(frozen=True)
class InequalityReport:
    """One verified bound: named sides, an oriented margin, and a verdict."""

    name: str
    lhs: float
    rhs: float
    margin: float
    holds: bool
    slack: float
    context: dict = field(default_factory=dict)

    @classmethod
    def upper_bound(cls, name, lhs, rhs, slack=None, context=None):
        """lhs <= rhs; margin = rhs - lhs."""
        slack = _default_slack(lhs, rhs) if slack is None else float(slack)
        margin = rhs - lhs
        return cls(name, float(lhs), float(rhs), float(margin), bool(margin >= -slack),
                   slack, dict(context or {}))

    @classmethod
    def lower_bound(cls, name, lhs, rhs, slack=None, context=None):
        """lhs >= rhs; margin = lhs - rhs."""
        slack = _default_slack(lhs, rhs) if slack is None else float(slack)
        margin = lhs - rhs
        return cls(name, float(lhs), float(rhs), float(margin), bool(margin >= -slack),
                   slack, dict(context or {}))

    def as_dict(self) -> dict:
        return {
            "name": self.name, "lhs": self.lhs, "rhs": self.rhs,
            "margin": self.margin, "holds": self.holds, "slack": self.slack,
            "context": self.context,
        }


@dataclass(frozen=True)
class DensityField:
    """Nonnegative values on a lattice with a uniform cell measure."""

    values: np.ndarray
    cell_measure: float

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if np.any(values < 0.0):
            raise ValueError("density values must be nonnegative")
        if self.cell_measure <= 0.0:
            raise ValueError("cell measure must be positive")
        object.__setattr__(self, "values", values)

    @property
    def mass(self) -> float:
        return float(self.values.sum() * self.cell_measure)

    @classmethod
    def from_signal(cls, f: QSignal4) -> "DensityField":
        return cls(qmodulus(f.data) ** 2, f.lattice.cell_measure)

    @classmethod
    def from_spectrum(cls, S: SpectrumField) -> "DensityField":
        return cls(qmodulus(S.values) ** 2, S.cell_measure)

    @classmethod
    def from_timefreq(cls, T: TimeFreqField) -> "DensityField":
        return cls(qmodulus(T.values) ** 2, T.cell_measure)


def normalize_l2(f: QSignal4) -> QSignal4:
    """Rescale to unit L2 norm (the entropy reports require densities)."""
    n = lp_norm(f, 2)
    if n == 0.0:
        raise ValueError("cannot normalize the zero signal")
    return QSignal4(f.lattice, f.data / n)


def ap_constant(p: float) -> float:
    """Babenko-Beckner constant (p^{1/p} / q^{1/q})^{1/2} for 1 <= p <= 2.

    Continuous at the endpoints: A_1 = A_2 = 1 (q^{1/q} -> 1 as q -> inf).
    """
    p = float(p)
    if not 1.0 <= p <= 2.0:
        raise ValueError(f"require 1 <= p <= 2, got {p}")
    if p == 1.0:
        return 1.0
    q = p / (p - 1.0)
    return math.sqrt(p ** (1.0 / p) / q ** (1.0 / q))


def _conjugate_exponent(p: float) -> float:
    return math.inf if p == 1.0 else p / (p - 1.0)


def hy_check(f: QSignal4, p: ParamSet, expP: float, spectrum: SpectrumField | None = None) -> InequalityReport:
    """Hausdorff-Young bound: the spectral q-norm against the signal p-norm.

    rhs = |sin g1|^{2/q-1} |sin g2|^{2/q-1} * A_p^4 * ||f||_p, the Beckner
    factor included (it belongs in the bound; the p = 2 case collapses to
    the Parseval equality).
    """
    expP = float(expP)
    if not 1.0 <= expP <= 2.0:
        raise ValueError(f"require 1 <= expP <= 2, got {expP}")
    q = _conjugate_exponent(expP)
    S = qcfrft_fast(f, p) if spectrum is None else spectrum
    lhs = S.lp_norm(q)
    expo = (2.0 / q - 1.0) if q != math.inf else -1.0
    rhs = p.abs_sin_product**expo * ap_constant(expP) ** 4 * lp_norm(f, expP)
    return InequalityReport.upper_bound(
        "hausdorff-young", lhs, rhs,
        context={"p": expP, "q": q, "angles": p.angles},
    )


def renyi_entropy(P: DensityField, s: float) -> float:
    """H_s = ln(sum P^s * cell) / (1 - s) for a unit-mass density, s > 0, s != 1."""
    s = float(s)
    if s <= 0.0 or s == 1.0:
        raise ValueError(f"require s > 0 and s != 1, got {s}")
    if abs(P.mass - 1.0) > MASS_TOL:
        raise ValueError(f"density mass {P.mass} is not 1 within {MASS_TOL}")
    return float(np.log(np.sum(P.values**s) * P.cell_measure) / (1.0 - s))


def shannon_entropy(P: DensityField) -> float:
    """E = -sum P ln(P) * cell with 0 ln 0 = 0, for a unit-mass density."""
    if abs(P.mass - 1.0) > MASS_TOL:
        raise ValueError(f"density mass {P.mass} is not 1 within {MASS_TOL}")
    v = P.values
    pos = v > 0.0
    return float(-(v[pos] * np.log(v[pos])).sum() * P.cell_measure)


def _require_unit_norm(f: QSignal4):
    n = lp_norm(f, 2)
    if abs(n - 1.0) > MASS_TOL:
        raise ValueError(f"signal must be unit-norm (||f||_2 = {n}); use normalize_l2")


def renyi_up_report(f: QSignal4, p: ParamSet, alpha0: float) -> InequalityReport:
    """Renyi-entropy uncertainty bound for a unit-norm signal.

    H_a(|f|^2) + H_b(|Ff|^2) >= 2 ln(2a)/(a-1) + 2 ln(2b)/(b-1)
                                + 2 ln(|sin g1| |sin g2|),
    with b = 1/(2 - 1/a) and 1/2 < a < 1.
    """
    alpha0 = float(alpha0)
    if not 0.5 < alpha0 < 1.0:
        raise ValueError(f"require 1/2 < alpha0 < 1, got {alpha0}")
    _require_unit_norm(f)
    beta0 = 1.0 / (2.0 - 1.0 / alpha0)
    S = qcfrft_fast(f, p)
    lhs = renyi_entropy(DensityField.from_signal(f), alpha0) + renyi_entropy(
        DensityField.from_spectrum(S), beta0
    )
    rhs = (
        2.0 / (alpha0 - 1.0) * math.log(2.0 * alpha0)
        + 2.0 / (beta0 - 1.0) * math.log(2.0 * beta0)
        + 2.0 * math.log(p.abs_sin_product)
    )
    return InequalityReport.lower_bound(
        "renyi-up", lhs, rhs, slack=UP_SLACK,
        context={"alpha0": alpha0, "beta0": beta0, "angles": p.angles},
    )


def shannon_up_report(f: QSignal4, p: ParamSet) -> InequalityReport:
    """Shannon-entropy limit of the Renyi bound for a unit-norm signal:
    E(|f|^2) + E(|Ff|^2) >= 2 ln(e^2/4 |sin g1| |sin g2|)."""
    _require_unit_norm(f)
    S = qcfrft_fast(f, p)
    lhs = shannon_entropy(DensityField.from_signal(f)) + shannon_entropy(
        DensityField.from_spectrum(S)
    )
    rhs = 2.0 * math.log(math.e**2 / 4.0 * p.abs_sin_product)
    return InequalityReport.lower_bound(
        "shannon-up", lhs, rhs, slack=UP_SLACK, context={"angles": p.angles}
    )


def lieb_inequality_report(
    f: QSignal4, g, p: ParamSet, q: float, field_: TimeFreqField | None = None
) -> InequalityReport:
    """Joint (x, xi) q-norm bound on the windowed transform, q >= 2:

    ||S||_q <= |sin g1|^{2/q-1} |sin g2|^{2/q-1} (2/q)^{4/q} ||g||_2 ||f||_2.
    """
    q = float(q)
    if q < 2.0:
        raise ValueError(f"require q >= 2, got {q}")
    win = _as_window(g)
    T = stqcfrft_compute(f, win, p) if field_ is None else field_
    lhs = T.lp_norm(q)
    rhs = (
        p.abs_sin_product ** (2.0 / q - 1.0)
        * (2.0 / q) ** (4.0 / q)
        * lp_norm(win.signal, 2)
        * lp_norm(f, 2)
    )
    return InequalityReport.upper_bound(
        "lieb", lhs, rhs, context={"q": q, "angles": p.angles}
    )


def concentration_support(T: TimeFreqField, eps: float) -> float:
    """Measure of the smallest cell set holding all but an eps fraction of
    the field's L2 norm (cells greedily taken in decreasing |S|^2 order,
    which is optimal for this objective)."""
    eps = float(eps)
    if not 0.0 <= eps <= 1.0:
        raise ValueError(f"require 0 <= eps <= 1, got {eps}")
    energies = np.sort((qmodulus(T.values) ** 2).ravel())[::-1]
    total = energies.sum()
    if total == 0.0 or eps == 1.0:
        return 0.0
    if eps == 0.0:
        n_cells = int(np.count_nonzero(energies))
    else:
        target = (1.0 - eps * eps) * total
        cum = np.cumsum(energies)
        n_cells = int(np.searchsorted(cum, target * (1.0 - 1e-12)) + 1)
    return n_cells * T.cell_measure


def support_bound_constant(q: float) -> float:
    """(q/2)^{8/(q-2)} for q > 2; tends to e^4 as q -> 2+."""
    q = float(q)
    if q <= 2.0:
        raise ValueError(f"require q > 2, got {q}")
    return (q / 2.0) ** (8.0 / (q - 2.0))


def lieb_support_report(T: TimeFreqField, eps: float, q: float) -> InequalityReport:
    """Concentration-region lower bound, q > 2:

    |Omega| >= |sin g1|^2 |sin g2|^2 (1 - eps^2)^{q/(q-2)} (q/2)^{8/(q-2)}.
    """
    q = float(q)
    if q <= 2.0:
        raise ValueError(f"require q > 2, got {q}")
    lhs = concentration_support(T, eps)
    p = T.params
    rhs = (
        p.abs_sin_product**2
        * (1.0 - eps * eps) ** (q / (q - 2.0))
        * support_bound_constant(q)
    )
    return InequalityReport.lower_bound(
        "lieb-support", lhs, rhs, context={"eps": eps, "q": q, "angles": p.angles}
    )


def stqcfrft_entropy_report(f: QSignal4, g, p: ParamSet, field_: TimeFreqField | None = None) -> InequalityReport:
    """Entropy bound for the windowed transform of a pair with
    ||f||_2 ||g||_2 = 1:

    -sum |S|^2 ln(|S|^2) * cells >= 2 [2 + ln(|sin g1| |sin g2|)].
    """
    win = _as_window(g)
    prod = lp_norm(f, 2) * lp_norm(win.signal, 2)
    if abs(prod - 1.0) > MASS_TOL:
        raise ValueError(f"require ||f||_2 ||g||_2 = 1, got {prod}; rescale the pair")
    T = stqcfrft_compute(f, win, p) if field_ is None else field_
    lhs = shannon_entropy(DensityField.from_timefreq(T))
    rhs = 2.0 * (2.0 + math.log(p.abs_sin_product))
    return InequalityReport.lower_bound(
        "stqcfrft-entropy-up", lhs, rhs, slack=UP_SLACK, context={"angles": p.angles}
    )
