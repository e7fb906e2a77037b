"""Command-line surface: transforms on signal files, verification suites,
entropy reports, and closed-form comparisons.

Exit codes: 0 success, 1 malformed input or flags, 2 verification failure.
Angles are radians only.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .analysis import (
    DensityField,
    normalize_l2,
    renyi_entropy,
    shannon_entropy,
)
from .closedform import (
    box_window_signal,
    box_window_stqcfrft,
    chirped_gaussian_signal,
    gaussian_qcfrft,
    gaussian_signal,
)
from .fractional import SpectrumField, qcfrft_direct, qcfrft_fast, qcfrft_inverse
from .grids import Lattice
from .params import InvalidAngles, derive_params
from .shorttime import (
    TimeFreqField,
    stqcfrft_compute,
    stqcfrft_reconstruct,
    windowed_product,
)
from .signal import QSignal4, lp_norm
from .signalio import (
    SignalFileError,
    read_file,
    write_signal,
    write_spectrum,
    write_timefreq,
)
from .verify import run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY_FAILED = 2


class CommandError(Exception):
    """User-facing input problem; maps to exit code 1."""


def _parse_pair(text: str, label: str) -> tuple[float, float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise CommandError(f"--{label} expects two comma-separated radians, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise CommandError(f"--{label}: {exc}") from exc


def _parse_stride(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise CommandError(f"--stride expects four comma-separated integers, got {text!r}")
    try:
        stride = tuple(int(s) for s in parts)
    except ValueError as exc:
        raise CommandError(f"--stride: {exc}") from exc
    if any(s < 1 for s in stride):
        raise CommandError(f"--stride entries must be positive, got {stride}")
    return stride


def _params_from_args(args):
    a1, a2 = _parse_pair(args.alpha, "alpha")
    b1, b2 = _parse_pair(args.beta, "beta")
    try:
        return derive_params(a1, b1, a2, b2)
    except InvalidAngles as exc:
        raise CommandError(str(exc)) from exc


def _load(path: str, expect: type, what: str):
    obj = read_file(path)
    if not isinstance(obj, expect):
        raise CommandError(f"{path} holds kind {type(obj).__name__}, expected {what}")
    return obj


def _cmd_forward(args) -> int:
    sig = _load(args.infile, QSignal4, "a signal (qsig4)")
    p = _params_from_args(args)
    if args.method == "fast":
        S = qcfrft_fast(sig, p)
    else:
        freq = sig.lattice.freq()
        S = SpectrumField(freq, p, np.zeros(freq.dims + (4,)), sig.lattice.delta)
        vals = qcfrft_direct(sig, p, S.xi_points()).reshape(freq.dims + (4,))
        S = SpectrumField(freq, p, vals, sig.lattice.delta)
    write_spectrum(args.outfile, S, encoding=args.encoding)
    return EXIT_OK


def _cmd_inverse(args) -> int:
    S = _load(args.infile, SpectrumField, "a spectrum (qspec)")
    write_signal(args.outfile, qcfrft_inverse(S), encoding=args.encoding)
    return EXIT_OK


def _cmd_stft(args) -> int:
    sig = _load(args.infile, QSignal4, "a signal (qsig4)")
    win = _load(args.window, QSignal4, "a window signal (qsig4)")
    p = _params_from_args(args)
    stride = _parse_stride(args.stride)
    try:
        T = stqcfrft_compute(sig, win, p, stride)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    write_timefreq(args.outfile, T, encoding=args.encoding)
    return EXIT_OK


def _cmd_reconstruct(args) -> int:
    T = _load(args.infile, TimeFreqField, "a time-frequency field (qtf)")
    win = _load(args.window, QSignal4, "a window signal (qsig4)")
    try:
        f = stqcfrft_reconstruct(T, win)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    write_signal(args.outfile, f, encoding=args.encoding)
    return EXIT_OK


def _cmd_verify(args) -> int:
    try:
        report = run_suite(args.suite, size=args.size, seed=args.seed,
                           kernel_scale=args.inject_kernel_error)
    except ValueError as exc:
        raise CommandError(str(exc)) from exc
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh, indent=2)
    n = len(report["results"])
    n_fail = sum(1 for r in report["results"] if not r["holds"])
    status = "pass" if report["pass"] else "FAIL"
    print(f"suite {args.suite}: {n - n_fail}/{n} checks passed -> {status}")
    if not report["pass"]:
        for r in report["results"]:
            if not r["holds"]:
                print(f"  failed: {r['name']} {r.get('context', {})}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_entropy(args) -> int:
    sig = _load(args.infile, QSignal4, "a signal (qsig4)")
    p = _params_from_args(args)
    f = normalize_l2(sig)
    S = qcfrft_fast(f, p)
    dens_t = DensityField.from_signal(f)
    dens_x = DensityField.from_spectrum(S)
    out = {
        "shannon_time": shannon_entropy(dens_t),
        "shannon_spectrum": shannon_entropy(dens_x),
        "angles": list(p.angles),
    }
    if args.renyi is not None:
        a0 = args.renyi
        if not 0.5 < a0 < 1.0:
            raise CommandError(f"--renyi must lie in (1/2, 1), got {a0}")
        b0 = 1.0 / (2.0 - 1.0 / a0)
        out["renyi_time"] = renyi_entropy(dens_t, a0)
        out["renyi_spectrum"] = renyi_entropy(dens_x, b0)
        out["alpha0"] = a0
        out["beta0"] = b0
    print(json.dumps(out, indent=2))
    return EXIT_OK


def _cmd_example(args) -> int:
    if args.which == "gaussian":
        lat = Lattice((args.size,) * 4, (args.delta,) * 4)
        p = derive_params(0.9, 0.4, 1.7, -0.6)
        f = chirped_gaussian_signal(lat, p, A=1.0, B=1.0)
        rng = np.random.default_rng(0)
        scale = min(math.pi / (2 * max(lat.freq().du)), 1.5)
        xi = rng.uniform(-scale, scale, size=(10, 4))
        got = qcfrft_direct(f, p, xi)
        expect = np.stack([gaussian_qcfrft(p, 1.0, 1.0, x) for x in xi])
        err = np.linalg.norm(got - expect, axis=1) / np.linalg.norm(expect, axis=1)
        print(json.dumps({
            "example": "gaussian", "grid": args.size, "delta": args.delta,
            "max_rel_err": float(err.max()),
        }, indent=2))
        return EXIT_OK
    # bipolar box window
    lat = Lattice((args.size,) * 4, (args.delta,) * 4)
    p = derive_params(np.pi / 2, np.pi / 6, 2 * np.pi / 5, 2 * np.pi / 5)
    f = gaussian_signal(lat)
    g = box_window_signal(lat)
    x = np.array([-0.5, -0.5, -0.5, -0.5])
    xi = np.array([0.4, -0.3, 0.2, 0.1])
    idx = tuple(int(round(x[a] / lat.delta[a])) + lat.dims[a] // 2 for a in range(4))
    h = windowed_product(f, g, idx)
    got = qcfrft_direct(h, p, np.array([xi]))[0]
    expect = box_window_stqcfrft(p, x, xi)
    rel = float(np.linalg.norm(got - expect) / np.linalg.norm(expect))
    print(json.dumps({
        "example": "boxwindow", "grid": args.size, "delta": args.delta,
        "x": x.tolist(), "xi": xi.tolist(),
        "lattice_vs_closed_form_rel_err": rel,
    }, indent=2))
    return EXIT_OK


def _cmd_info(args) -> int:
    obj = read_file(args.infile)
    if isinstance(obj, QSignal4):
        out = {"kind": "qsig4", "dims": list(obj.lattice.dims),
               "delta": list(obj.lattice.delta), "l2_norm": lp_norm(obj, 2)}
    elif isinstance(obj, SpectrumField):
        out = {"kind": "qspec", "dims": list(obj.base_freq.dims),
               "signal_delta": list(obj.signal_delta),
               "angles": list(obj.params.angles), "l2_norm": obj.lp_norm(2)}
    else:
        out = {"kind": "qtf", "dims": list(obj.signal_lattice.dims),
               "delta": list(obj.signal_lattice.delta), "stride": list(obj.stride),
               "angles": list(obj.params.angles), "positions": obj.n_positions}
    print(json.dumps(out, indent=2))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qcfrft",
        description="Two-sided quaternion coupled fractional Fourier transform toolkit",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_io(sp, window=False):
        sp.add_argument("--in", dest="infile", required=True)
        sp.add_argument("--out", dest="outfile", required=True)
        if window:
            sp.add_argument("--window", required=True)
        sp.add_argument("--encoding", choices=["b64le-f64", "json"], default="b64le-f64")

    def add_angles(sp):
        sp.add_argument("--alpha", required=True, help="alpha1,alpha2 in radians")
        sp.add_argument("--beta", required=True, help="beta1,beta2 in radians")

    sp = sub.add_parser("forward", help="fractional transform of a signal file")
    add_io(sp)
    add_angles(sp)
    sp.add_argument("--method", choices=["fast", "direct"], default="fast")
    sp.set_defaults(func=_cmd_forward)

    sp = sub.add_parser("inverse", help="invert a spectrum file")
    add_io(sp)
    sp.set_defaults(func=_cmd_inverse)

    sp = sub.add_parser("stft", help="short-time transform of a signal against a window")
    add_io(sp, window=True)
    add_angles(sp)
    sp.add_argument("--stride", default="1,1,1,1", help="s1,s2,s3,s4 window-position strides")
    sp.set_defaults(func=_cmd_stft)

    sp = sub.add_parser("reconstruct", help="synthesize the signal back from a qtf file")
    add_io(sp, window=True)
    sp.set_defaults(func=_cmd_reconstruct)

    sp = sub.add_parser("verify", help="run a seeded verification suite")
    sp.add_argument("--suite", required=True,
                    choices=["parseval", "roundtrip", "hy", "renyi", "lieb",
                             "support", "entropy", "properties", "all"])
    sp.add_argument("--size", type=int, default=6)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--report", default=None, help="write the JSON report here")
    sp.add_argument("--inject-kernel-error", type=float, default=1.0,
                    help=argparse.SUPPRESS)  # fault-injection fixture (negative control)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("entropy", help="entropy report for a signal file")
    sp.add_argument("--in", dest="infile", required=True)
    add_angles(sp)
    sp.add_argument("--renyi", type=float, default=None, help="alpha0 in (1/2, 1)")
    sp.set_defaults(func=_cmd_entropy)

    sp = sub.add_parser("example", help="closed form vs numeric comparison")
    sp.add_argument("which", choices=["gaussian", "boxwindow"])
    sp.add_argument("--size", type=int, default=16)
    sp.add_argument("--delta", type=float, default=0.5)
    sp.set_defaults(func=_cmd_example)

    sp = sub.add_parser("info", help="print a signal file header")
    sp.add_argument("--in", dest="infile", required=True)
    sp.set_defaults(func=_cmd_info)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; malformed flags are exit 1 here
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (CommandError, SignalFileError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
