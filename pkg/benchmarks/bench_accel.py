#!/usr/bin/env python3
"""Benchmark the numba inner loop of the direct transform against the
pure-numpy fallback, and both against the FFT fast path.

Run:  python benchmarks/bench_accel.py [--size 6] [--repeats 3]
(QCFRFT_PURE_NUMPY only affects which path the package itself uses; this
script always times both implementations directly.)
"""

import argparse
import time

import numpy as np

from qcfrft import Lattice, QSignal4, derive_params, qcfrft_fast
from qcfrft._accel import NUMBA_ENABLED, sandwich_numpy_reference
from qcfrft.fractional import _split_blocks


def _time(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=6)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    lat = Lattice((args.size,) * 4, (1.0,) * 4)
    rng = np.random.default_rng(0)
    f = QSignal4(lat, rng.standard_normal(lat.dims + (4,)))
    p = derive_params(0.9, 0.4, 1.7, -0.6)

    S = qcfrft_fast(f, p)
    xi = np.ascontiguousarray(S.xi_points())
    f1, f2 = _split_blocks(f)
    t1 = lat.block_coords(0)
    t2 = lat.block_coords(1)
    sandwich_args = (
        f1, f2, t1, t2, xi,
        p.pair1.a, p.pair1.b, p.pair1.c, p.pair1.d,
        p.pair2.a, p.pair2.b, p.pair2.c, p.pair2.d,
    )

    t_np, out_np = _time(lambda: sandwich_numpy_reference(*sandwich_args), args.repeats)
    print(f"direct transform, N={args.size}^4, {xi.shape[0]} frequency points")
    print(f"  numpy fallback : {t_np * 1e3:9.1f} ms")

    if NUMBA_ENABLED:
        from qcfrft._accel import _sandwich_numba

        _sandwich_numba(*sandwich_args)  # trigger JIT before timing
        t_nb, out_nb = _time(lambda: _sandwich_numba(*sandwich_args), args.repeats)
        diff = max(np.abs(out_np[0] - out_nb[0]).max(), np.abs(out_np[1] - out_nb[1]).max())
        print(f"  numba @njit    : {t_nb * 1e3:9.1f} ms   (speedup x{t_np / t_nb:.1f}, "
              f"max |diff| {diff:.2e})")
    else:
        print("  numba @njit    : unavailable (install numba / unset QCFRFT_PURE_NUMPY)")

    t_fast, _ = _time(lambda: qcfrft_fast(f, p), args.repeats)
    print(f"  FFT fast path  : {t_fast * 1e3:9.1f} ms")


if __name__ == "__main__":
    main()
