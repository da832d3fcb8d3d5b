"""JSON matrix and state files.

Matrix: ``{"dim": n, "entries": [[re, im], ...]}`` with n*n row-major pairs.
State: ``{"qubits": n, "amplitudes": [[re, im], ...]}``.
Floats are written with ``repr`` precision, so a write/read cycle is exact.
"""

from __future__ import annotations

import json

import numpy as np

from .linalg import as_square
from .states import PureState, make_state


def _pairs(values) -> list[list[float]]:
    return [[float(z.real), float(z.imag)] for z in np.asarray(values).ravel()]


def _complexes(pairs, count, what) -> np.ndarray:
    if not isinstance(pairs, list) or len(pairs) != count:
        raise ValueError(f"{what}: expected {count} [re, im] pairs")
    out = np.empty(count, dtype=np.complex128)
    for k, p in enumerate(pairs):
        if not (isinstance(p, list) and len(p) == 2):
            raise ValueError(f"{what}: entry {k} is not a [re, im] pair")
        out[k] = complex(float(p[0]), float(p[1]))
    return out


def matrix_to_dict(m) -> dict:
    m = as_square(m)
    return {"dim": m.shape[0], "entries": _pairs(m)}


def matrix_from_dict(doc) -> np.ndarray:
    try:
        dim = int(doc["dim"])
        entries = doc["entries"]
    except (KeyError, TypeError) as exc:
        raise ValueError("matrix document needs 'dim' and 'entries'") from exc
    if dim < 1:
        raise ValueError("dim must be positive")
    return as_square(_complexes(entries, dim * dim, "entries").reshape(dim, dim))


def write_matrix(path, m) -> None:
    with open(path, "w") as f:
        json.dump(matrix_to_dict(m), f)
        f.write("\n")


def read_matrix(path) -> np.ndarray:
    with open(path) as f:
        return matrix_from_dict(json.load(f))


def write_state(path, s: PureState) -> None:
    with open(path, "w") as f:
        json.dump({"qubits": s.qubits, "amplitudes": _pairs(s.amplitudes)}, f)
        f.write("\n")


def read_state(path) -> PureState:
    with open(path) as f:
        doc = json.load(f)
    try:
        n = int(doc["qubits"])
        amps = doc["amplitudes"]
    except (KeyError, TypeError) as exc:
        raise ValueError("state document needs 'qubits' and 'amplitudes'") from exc
    return make_state(n, _complexes(amps, 2**n, "amplitudes"))
