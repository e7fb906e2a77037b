"""Seeded verification suites behind the command-line ``verify`` command.

Each suite generates reproducible random signals (componentwise standard
normal draws under a Gaussian envelope e^{-|t|^2/2}, so continuous-model
comparisons stay meaningful), runs a batch of identity or inequality
checks, and returns a report dictionary:

    {"suite", "seed", "grid": {"dims", "delta"}, "results": [...], "pass"}

Identity checks record a scaled residual against a tolerance; inequality
checks embed the full report record.  ``kernel_scale`` feeds the
fault-injection fixture in ``derive_params`` so a negative control can
demonstrate that corrupted kernels are detected.
"""

from __future__ import annotations

import numpy as np

from .algebra import qconj, qmodulus, qmul, scalar_part, symplectic_join, symplectic_split
from .analysis import (
    InequalityReport,
    hy_check,
    lieb_inequality_report,
    lieb_support_report,
    normalize_l2,
    renyi_up_report,
    shannon_up_report,
    stqcfrft_entropy_report,
    support_bound_constant,
)
from .closedform import gaussian_signal
from .fractional import qcfrft_direct, qcfrft_fast, qcfrft_inverse
from .grids import Lattice
from .params import ParamSet, derive_params, kernel_phase, kernel_shift_phase
from .qft import qft_direct, qft_fast, qft_inverse
from .shorttime import (
    stqcfrft_compute,
    stqcfrft_reconstruct,
    translation_xi_shift,
    windowed_product,
)
from .signal import QSignal4, inner_product, lp_norm, sc_inner

__all__ = ["SUITES", "run_suite", "random_enveloped_signal", "standard_angle_sets"]

IDENTITY_TOL = 1e-10
KERNEL_TOL = 1e-12
RECON_TOL = 1e-8


def standard_angle_sets(kernel_scale: float = 1.0) -> list[ParamSet]:
    """A spread of valid coupled-angle sets used across the suites."""
    specs = [
        (np.pi / 2, np.pi / 2, np.pi / 2, np.pi / 2),
        (np.pi / 2, np.pi / 6, 2 * np.pi / 5, 2 * np.pi / 5),
        (0.9, 0.4, 1.7, -0.6),
    ]
    return [derive_params(*s, kernel_scale=kernel_scale) for s in specs]


def random_enveloped_signal(lattice: Lattice, rng: np.random.Generator) -> QSignal4:
    g = lattice.grid()
    env = np.exp(-0.5 * (g[0] ** 2 + g[1] ** 2 + g[2] ** 2 + g[3] ** 2))
    return QSignal4(lattice, rng.standard_normal(lattice.dims + (4,)) * env[..., None])


def _residual_record(name: str, residual: float, tol: float, **context) -> dict:
    return {
        "name": name,
        "residual": float(residual),
        "tol": float(tol),
        "holds": bool(residual <= tol),
        "context": context,
    }


def _scaled(diff: np.ndarray, ref: np.ndarray) -> float:
    peak = float(np.abs(ref).max())
    return float(np.abs(diff).max()) / (peak if peak > 0 else 1.0)


# ---------------------------------------------------------------- suites

def _suite_parseval(size, seed, kernel_scale):
    lat = Lattice((size,) * 4, (0.75,) * 4)
    rng = np.random.default_rng(seed)
    records = []
    for p_idx, p in enumerate(standard_angle_sets(kernel_scale)):
        for rep in range(4):
            f = random_enveloped_signal(lat, rng)
            g = random_enveloped_signal(lat, rng)
            Sf, Sg = qcfrft_fast(f, p), qcfrft_fast(g, p)
            lhs = float(scalar_part(qmul(Sf.values, qconj(Sg.values))).sum() * Sf.cell_measure)
            rhs = sc_inner(f, g)
            records.append(_residual_record(
                "parseval-sc-inner", abs(lhs - rhs) / max(abs(rhs), 1e-30), IDENTITY_TOL,
                angles=p.angles, rep=rep,
            ))
            n2 = lp_norm(f, 2)
            records.append(_residual_record(
                "parseval-norm", abs(Sf.lp_norm(2) - n2) / n2, IDENTITY_TOL,
                angles=p.angles, rep=rep,
            ))
    return lat, records


def _suite_roundtrip(size, seed, kernel_scale):
    lat = Lattice((size,) * 4, (0.8, 1.0, 0.9, 1.1))
    rng = np.random.default_rng(seed)
    records = []
    for rep in range(2):
        f = random_enveloped_signal(lat, rng)
        F = qft_fast(f)
        records.append(_residual_record(
            "qft-roundtrip", _scaled(qft_inverse(F, lat).data - f.data, f.data),
            IDENTITY_TOL, rep=rep,
        ))
        records.append(_residual_record(
            "qft-fast-vs-direct", _scaled(F.data - qft_direct(f).data, F.data),
            IDENTITY_TOL, rep=rep,
        ))
        for p in standard_angle_sets(kernel_scale):
            S = qcfrft_fast(f, p)
            records.append(_residual_record(
                "qcfrft-roundtrip", _scaled(qcfrft_inverse(S).data - f.data, f.data),
                IDENTITY_TOL, angles=p.angles, rep=rep,
            ))
            direct = qcfrft_direct(f, p, S.xi_points()).reshape(S.values.shape)
            records.append(_residual_record(
                "qcfrft-fast-vs-direct", _scaled(S.values - direct, S.values),
                IDENTITY_TOL, angles=p.angles, rep=rep,
            ))
    return lat, records


def _suite_hy(size, seed, kernel_scale):
    lat = Lattice((size,) * 4, (0.75,) * 4)
    rng = np.random.default_rng(seed)
    records = []
    for p in standard_angle_sets(kernel_scale):
        for rep in range(4):
            f = random_enveloped_signal(lat, rng)
            S = qcfrft_fast(f, p)
            for expP in (1.0, 4.0 / 3.0, 2.0):
                rep_ = hy_check(f, p, expP, spectrum=S)
                rec = rep_.as_dict()
                rec["context"]["rep"] = rep
                records.append(rec)
            eq = hy_check(f, p, 2.0, spectrum=S)
            records.append(_residual_record(
                "hy-parseval-equality", abs(eq.lhs - eq.rhs) / eq.rhs, IDENTITY_TOL,
                angles=p.angles, rep=rep,
            ))
    return lat, records


def _suite_renyi(size, seed, kernel_scale):
    n = size if size >= 12 else 16
    lat = Lattice((n,) * 4, (0.5,) * 4)
    rng = np.random.default_rng(seed)
    gauss = normalize_l2(gaussian_signal(lat, width=0.5))
    signals = [("gaussian", gauss)]
    for rep in range(2):
        signals.append((f"random-{rep}", normalize_l2(random_enveloped_signal(lat, rng))))
    angle_sets = [
        derive_params(np.pi / 2, np.pi / 2, np.pi / 2, np.pi / 2, kernel_scale=kernel_scale),
        derive_params(np.pi / 3, np.pi / 3, np.pi / 3, np.pi / 3, kernel_scale=kernel_scale),
    ]
    records = []
    for p in angle_sets:
        for label, f in signals:
            for alpha0 in (0.6, 0.75, 0.9):
                rec = renyi_up_report(f, p, alpha0).as_dict()
                rec["context"]["signal"] = label
                records.append(rec)
            rec = shannon_up_report(f, p).as_dict()
            rec["context"]["signal"] = label
            records.append(rec)
    return lat, records


def _suite_lieb(size, seed, kernel_scale):
    lat = Lattice((size,) * 4, (1.0,) * 4)
    rng = np.random.default_rng(seed)
    records = []
    for p in standard_angle_sets(kernel_scale):
        for rep in range(2):
            f = random_enveloped_signal(lat, rng)
            g = random_enveloped_signal(lat, rng)
            T = stqcfrft_compute(f, g, p)
            eq = lieb_inequality_report(f, g, p, 2.0, field_=T)
            records.append(_residual_record(
                "lieb-q2-energy-equality", abs(eq.lhs - eq.rhs) / eq.rhs, IDENTITY_TOL,
                angles=p.angles, rep=rep,
            ))
            for q in (2.5, 3.0, 4.0):
                rec = lieb_inequality_report(f, g, p, q, field_=T).as_dict()
                rec["context"]["rep"] = rep
                records.append(rec)
    return lat, records


def _suite_support(size, seed, kernel_scale):
    lat = Lattice((size,) * 4, (1.0,) * 4)
    records = []
    f = gaussian_signal(lat, width=0.5)
    g = gaussian_signal(lat, width=1.0)
    for p in standard_angle_sets(kernel_scale):
        T = stqcfrft_compute(f, g, p)
        for eps in (0.0, 0.1, 0.5):
            for q in (2.5, 3.0, 4.0):
                records.append(lieb_support_report(T, eps, q).as_dict())
    records.append(_residual_record(
        "support-constant-e4", abs(support_bound_constant(2.0 + 1e-9) - np.exp(4.0)) / np.exp(4.0),
        1e-6,
    ))
    return lat, records


def _suite_entropy(size, seed, kernel_scale):
    lat = Lattice((size,) * 4, (1.0,) * 4)
    rng = np.random.default_rng(seed)
    angle_sets = [
        derive_params(np.pi / 2, np.pi / 2, np.pi / 2, np.pi / 2, kernel_scale=kernel_scale),
        derive_params(np.pi / 3, np.pi / 3, np.pi / 3, np.pi / 3, kernel_scale=kernel_scale),
        derive_params(2 * np.pi / 5, 2 * np.pi / 5, 2 * np.pi / 5, 2 * np.pi / 5,
                      kernel_scale=kernel_scale),
    ]
    pairs = [
        ("gaussian", gaussian_signal(lat, width=0.5), gaussian_signal(lat, width=1.0)),
        ("random-0", random_enveloped_signal(lat, rng), random_enveloped_signal(lat, rng)),
        ("random-1", random_enveloped_signal(lat, rng), random_enveloped_signal(lat, rng)),
    ]
    records = []
    for p in angle_sets:
        for label, f0, g0 in pairs:
            f = normalize_l2(f0)
            g = normalize_l2(g0)
            rec = stqcfrft_entropy_report(f, g, p).as_dict()
            rec["context"]["pair"] = label
            records.append(rec)
    return lat, records


def shifted_kernel_direct(h: QSignal4, p: ParamSet, l: np.ndarray, xi: np.ndarray) -> np.ndarray:
    """Direct sum with kernels evaluated at shifted times t + l (two-way
    translation-covariance oracle); returns one quaternion value."""
    t1 = h.lattice.block_coords(0) + l[0:2]
    t2 = h.lattice.block_coords(1) + l[2:4]
    ki = kernel_phase(p.pair1, t1, xi[0:2])
    kj = kernel_phase(p.pair2, t2, xi[2:4])
    n1, n2, n3, n4 = h.lattice.dims
    c1, c2 = symplectic_split(h.data)
    f1 = c1.reshape(n1 * n2, n3 * n4)
    f2 = c2.reshape(n1 * n2, n3 * n4)
    wr, wi = kj.real, kj.imag
    s1 = ki @ (f1 @ wr - f2 @ wi) * h.lattice.cell_measure
    s2 = ki @ (f1 @ wi + f2 @ wr) * h.lattice.cell_measure
    return symplectic_join(s1, s2)


def _suite_properties(size, seed, kernel_scale):
    lat = Lattice((size,) * 4, (1.0,) * 4)
    odd = Lattice((5,) * 4, (1.0,) * 4)
    rng = np.random.default_rng(seed)
    records = []
    p_sets = standard_angle_sets(kernel_scale)
    p = p_sets[2]

    # kernel shift identity (both sides), random (k, t, xi)
    for pair_idx, pair in enumerate((p.pair1, p.pair2)):
        k = rng.uniform(-2, 2, (200, 2))
        t = rng.uniform(-2, 2, (200, 2))
        xi = rng.uniform(-2, 2, (200, 2))
        lhs = kernel_phase(pair, t + k, xi)
        rhs = kernel_shift_phase(pair, k, t, xi) * kernel_phase(pair, t, xi)
        records.append(_residual_record(
            "kernel-shift-identity", float(np.abs(lhs - rhs).max() / np.abs(lhs).max()),
            KERNEL_TOL, block=pair_idx,
        ))

    f = random_enveloped_signal(lat, rng)
    g = random_enveloped_signal(lat, rng)

    # boundedness
    T = stqcfrft_compute(f, g, p)
    bound = lp_norm(f, 2) * lp_norm(g, 2) / (4 * np.pi**2 * p.abs_sin_product)
    records.append(InequalityReport.upper_bound(
        "stqcfrft-boundedness", float(qmodulus(T.values).max()), bound,
        context={"angles": p.angles},
    ).as_dict())

    # energy identity and reconstruction
    lhs = float((T.values.reshape(-1, 4) ** 2).sum()) * T.cell_measure
    rhs = lp_norm(f, 2) ** 2 * lp_norm(g, 2) ** 2
    records.append(_residual_record(
        "stqcfrft-energy-identity", abs(lhs - rhs) / rhs, IDENTITY_TOL, angles=p.angles,
    ))
    fr = stqcfrft_reconstruct(T, g)
    records.append(_residual_record(
        "stqcfrft-reconstruction", _scaled(fr.data - f.data, f.data), RECON_TOL,
        angles=p.angles,
    ))

    # inner product relation
    h = random_enveloped_signal(lat, rng)
    g2 = random_enveloped_signal(lat, rng)
    T2 = stqcfrft_compute(h, g2, p)
    lhs = float(scalar_part(qmul(T.values, qconj(T2.values))).sum() * T.cell_measure)
    gg = qmul(qconj(g.data), g2.data).reshape(-1, 4).sum(0) * lat.cell_measure
    rhs = float(scalar_part(qmul(qmul(f.data, gg), qconj(h.data))).sum() * lat.cell_measure)
    records.append(_residual_record(
        "stqcfrft-inner-product-relation", abs(lhs - rhs) / max(abs(rhs), 1e-30),
        IDENTITY_TOL, angles=p.angles,
    ))

    # left linearity in f over {1, i}; right anti-linearity in g over {1, j}
    c_i = symplectic_join(np.array(0.7 - 0.4j), np.array(0.0j))
    f2 = random_enveloped_signal(lat, rng)
    Ta = stqcfrft_compute(QSignal4(lat, qmul(c_i, f.data) + f2.data), g, p)
    Tb = stqcfrft_compute(f2, g, p)
    records.append(_residual_record(
        "stqcfrft-left-linearity",
        _scaled(Ta.values - (qmul(c_i, T.values) + Tb.values), Ta.values),
        KERNEL_TOL, angles=p.angles,
    ))
    r_j = symplectic_join(np.array(0.3 + 0.0j), np.array(-0.8 + 0.0j))  # 0.3 - 0.8 j
    Tc = stqcfrft_compute(f, QSignal4(lat, qmul(r_j, g.data) + g2.data), p)
    Td = stqcfrft_compute(f, g2, p)
    records.append(_residual_record(
        "stqcfrft-anti-linearity",
        _scaled(Tc.values - (qmul(T.values, qconj(r_j)) + Td.values), Tc.values),
        KERNEL_TOL, angles=p.angles,
    ))

    # parity on an odd lattice: S_{Pg}(Pf)(x, xi) = S_g f(-x, -xi)
    fo = random_enveloped_signal(odd, rng)
    go = random_enveloped_signal(odd, rng)
    Pf = QSignal4(odd, fo.data[::-1, ::-1, ::-1, ::-1])
    Pg = QSignal4(odd, go.data[::-1, ::-1, ::-1, ::-1])
    Tp = stqcfrft_compute(Pf, Pg, p)
    To = stqcfrft_compute(fo, go, p)
    ref = To.values.reshape(odd.dims + odd.dims + (4,))[
        ::-1, ::-1, ::-1, ::-1, ::-1, ::-1, ::-1, ::-1
    ].reshape(Tp.values.shape)
    records.append(_residual_record(
        "stqcfrft-parity", _scaled(Tp.values - ref, To.values), KERNEL_TOL,
        angles=p.angles,
    ))

    # translation covariance, two-way direct computation
    for p_t in (p, p_sets[0]):
        l_idx = np.array([1, 0, 2, 1])
        l = l_idx * np.array(lat.delta)
        x_idx = np.array([2, 3, 1, 4])
        xm_idx = (x_idx - l_idx) % np.array(lat.dims)
        hsig = windowed_product(f, g, xm_idx)
        shift = translation_xi_shift(p_t, l)
        for xi in (np.array([0.3, -0.8, 1.1, 0.4]), np.zeros(4)):
            lhs_val = shifted_kernel_direct(hsig, p_t, l, xi)
            rhs_val = qcfrft_direct(hsig, p_t, np.array([xi - shift]))[0]
            records.append(_residual_record(
                "translation-magnitude-covariance",
                abs(float(qmodulus(lhs_val)) - float(qmodulus(rhs_val)))
                / max(float(qmodulus(rhs_val)), 1e-30),
                IDENTITY_TOL, angles=p_t.angles, xi=list(xi),
            ))
    return lat, records


SUITES = {
    "parseval": _suite_parseval,
    "roundtrip": _suite_roundtrip,
    "hy": _suite_hy,
    "renyi": _suite_renyi,
    "lieb": _suite_lieb,
    "support": _suite_support,
    "entropy": _suite_entropy,
    "properties": _suite_properties,
}


def run_suite(name: str, size: int = 6, seed: int = 0, kernel_scale: float = 1.0) -> dict:
    """Run one named suite (or 'all') and assemble the report document."""
    if name == "all":
        results = []
        grid = None
        for sub in SUITES:
            lat, records = SUITES[sub](size, seed, kernel_scale)
            grid = grid or lat
            for rec in records:
                rec["suite"] = sub
            results.extend(records)
    else:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)} or 'all'")
        grid, results = SUITES[name](size, seed, kernel_scale)
    return {
        "suite": name,
        "seed": int(seed),
        "grid": {"dims": list(grid.dims), "delta": list(grid.delta)},
        "results": results,
        "pass": bool(all(r["holds"] for r in results)),
    }
