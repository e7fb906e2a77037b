"""JSON container for signals, spectra, and time-frequency fields.

Layout: a JSON document with a human-inspectable header and either a
base64 binary payload ("b64le-f64") or a plain JSON list ("json", meant
for tiny fixtures).  The binary payload is little-endian IEEE-754 float64,
quaternion components interleaved (w, x, y, z), samples row-major with
axis 4 varying fastest; time-frequency files put the window-position index
outermost.  Writes go through a temp file and os.replace, so a reader
never observes a half-written document.
"""

from __future__ import annotations

import base64
import json
import os
import tempfile

import numpy as np

from .fractional import SpectrumField
from .grids import Lattice
from .params import ParamSet, derive_params
from .shorttime import TimeFreqField
from .signal import QSignal4

__all__ = [
    "SignalFileError",
    "write_signal",
    "write_spectrum",
    "write_timefreq",
    "read_file",
]

FORMAT_VERSION = 1
ENCODINGS = ("b64le-f64", "json")


class SignalFileError(ValueError):
    """Malformed or inconsistent signal file."""


def _encode(data: np.ndarray, encoding: str):
    flat = np.ascontiguousarray(data, dtype="<f8")
    if encoding == "b64le-f64":
        return base64.b64encode(flat.tobytes()).decode("ascii")
    if encoding == "json":
        return flat.ravel().tolist()
    raise SignalFileError(f"unknown encoding {encoding!r}")


def _decode(payload, encoding: str, count: int) -> np.ndarray:
    if encoding == "b64le-f64":
        if not isinstance(payload, str):
            raise SignalFileError("b64le-f64 payload must be a string")
        try:
            raw = base64.b64decode(payload.encode("ascii"), validate=True)
        except Exception as exc:
            raise SignalFileError(f"invalid base64 payload: {exc}") from exc
        if len(raw) != 8 * count:
            raise SignalFileError(
                f"payload holds {len(raw) // 8} values, expected {count}"
            )
        return np.frombuffer(raw, dtype="<f8").astype(np.float64)
    if encoding == "json":
        arr = np.asarray(payload, dtype=np.float64).ravel()
        if arr.size != count:
            raise SignalFileError(f"payload holds {arr.size} values, expected {count}")
        return arr
    raise SignalFileError(f"unknown encoding {encoding!r}")


def _params_header(p: ParamSet) -> dict:
    a1, b1, a2, b2 = p.angles
    return {"alpha": [a1, a2], "beta": [b1, b2]}


def _atomic_write(path: str, doc: dict):
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(doc, fh)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_signal(path: str, sig: QSignal4, encoding: str = "b64le-f64"):
    doc = {
        "version": FORMAT_VERSION,
        "kind": "qsig4",
        "dims": list(sig.lattice.dims),
        "delta": list(sig.lattice.delta),
        "encoding": encoding,
        "data": _encode(sig.data, encoding),
    }
    _atomic_write(path, doc)


def write_spectrum(path: str, S: SpectrumField, encoding: str = "b64le-f64"):
    doc = {
        "version": FORMAT_VERSION,
        "kind": "qspec",
        "dims": list(S.base_freq.dims),
        "delta": list(S.signal_delta),
        "params": _params_header(S.params),
        "encoding": encoding,
        "data": _encode(S.values, encoding),
    }
    _atomic_write(path, doc)


def write_timefreq(path: str, T: TimeFreqField, encoding: str = "b64le-f64"):
    doc = {
        "version": FORMAT_VERSION,
        "kind": "qtf",
        "dims": list(T.signal_lattice.dims),
        "delta": list(T.signal_lattice.delta),
        "params": _params_header(T.params),
        "stride": list(T.stride),
        "encoding": encoding,
        "data": _encode(T.values, encoding),
    }
    _atomic_write(path, doc)


def _header_params(doc: dict) -> ParamSet:
    try:
        rec = doc["params"]
        alpha = rec["alpha"]
        beta = rec["beta"]
        return derive_params(alpha[0], beta[0], alpha[1], beta[1])
    except (KeyError, TypeError, IndexError) as exc:
        raise SignalFileError(f"missing or malformed params record: {exc}") from exc


def read_file(path: str):
    """Load a signal file; returns QSignal4, SpectrumField, or TimeFreqField."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SignalFileError(f"cannot read {path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise SignalFileError("document must be a JSON object")
    if doc.get("version") != FORMAT_VERSION:
        raise SignalFileError(f"unsupported version {doc.get('version')!r}")
    kind = doc.get("kind")
    encoding = doc.get("encoding", "b64le-f64")
    if encoding not in ENCODINGS:
        raise SignalFileError(f"unknown encoding {encoding!r}")
    try:
        dims = tuple(int(n) for n in doc["dims"])
        delta = tuple(float(d) for d in doc["delta"])
        lattice = Lattice(dims, delta)
    except (KeyError, TypeError, ValueError) as exc:
        raise SignalFileError(f"bad dims/delta header: {exc}") from exc
    n_samples = lattice.size

    if kind == "qsig4":
        flat = _decode(doc["data"], encoding, 4 * n_samples)
        try:
            return QSignal4(lattice, flat.reshape(dims + (4,)))
        except ValueError as exc:
            raise SignalFileError(str(exc)) from exc
    if kind == "qspec":
        p = _header_params(doc)
        flat = _decode(doc["data"], encoding, 4 * n_samples)
        return SpectrumField(lattice.freq(), p, flat.reshape(dims + (4,)), delta)
    if kind == "qtf":
        p = _header_params(doc)
        stride = tuple(int(s) for s in doc.get("stride", [1, 1, 1, 1]))
        counts = [len(range(0, n, s)) for n, s in zip(dims, stride)]
        n_pos = int(np.prod(counts))
        flat = _decode(doc["data"], encoding, 4 * n_pos * n_samples)
        try:
            return TimeFreqField(
                lattice, stride, lattice.freq(), p,
                flat.reshape((n_pos,) + dims + (4,)),
            )
        except ValueError as exc:
            raise SignalFileError(str(exc)) from exc
    raise SignalFileError(f"unknown kind {kind!r}")
