"""
Pure n-qubit states, two-qubit entanglement measures and single-qubit
projective measurement.

Qubit 1 is the leftmost tensor factor, i.e. the most significant bit of the
computational-basis index, so ``|q1 q2 q3>`` transcribes literally.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import ATOL, DimensionError, as_square, is_unitary

NORM_SLACK = 1e-6
IMPOSSIBLE = 1e-12

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Y2 = np.kron(SIGMA_Y, SIGMA_Y)

COMPUTATIONAL = (np.array([1, 0], dtype=np.complex128), np.array([0, 1], dtype=np.complex128))
HADAMARD_BASIS = (np.array([1, 1], dtype=np.complex128) / np.sqrt(2),
                  np.array([1, -1], dtype=np.complex128) / np.sqrt(2))
Y_BASIS = (np.array([1, 1j], dtype=np.complex128) / np.sqrt(2),
           np.array([1, -1j], dtype=np.complex128) / np.sqrt(2))
BASES = {"computational": COMPUTATIONAL, "z": COMPUTATIONAL,
         "hadamard": HADAMARD_BASIS, "x": HADAMARD_BASIS, "y": Y_BASIS}


@dataclass(frozen=True, eq=False)
class PureState:
    amplitudes: np.ndarray

    @property
    def qubits(self) -> int:
        return int(self.amplitudes.size).bit_length() - 1

    def __array__(self, dtype=None, copy=None):
        return self.amplitudes if dtype is None else self.amplitudes.astype(dtype)


@dataclass(frozen=True)
class MeasurementRecord:
    outcome: int
    probability: float
    residual: PureState | None

    @property
    def possible(self) -> bool:
        return self.residual is not None


def make_state(n: int, amplitudes) -> PureState:
    amps = np.array(amplitudes, dtype=np.complex128).ravel()
    if n < 1 or amps.size != 2**n:
        raise DimensionError(f"{n} qubits need {2**n} amplitudes, got {amps.size}")
    if not np.all(np.isfinite(amps)):
        raise ValueError("non-finite amplitude")
    norm = np.linalg.norm(amps)
    if norm == 0:
        raise ValueError("zero vector is not a state")
    if abs(norm - 1) > NORM_SLACK:
        raise ValueError(f"amplitudes have norm {norm:.9g}; expected 1 within {NORM_SLACK}")
    amps = amps / norm
    amps.flags.writeable = False
    return PureState(amps)


def _vec(s) -> np.ndarray:
    return s.amplitudes if isinstance(s, PureState) else np.asarray(s, dtype=np.complex128)


def _two_qubit(s) -> np.ndarray:
    v = _vec(s)
    if v.shape[-1] != 4:
        raise DimensionError(f"expected a 2-qubit state, got {v.shape[-1]} amplitudes")
    return v


def basis_state(n: int, k: int) -> PureState:
    if not 0 <= k < 2**n:
        raise ValueError(f"basis index {k} out of range for {n} qubits")
    amps = np.zeros(2**n, dtype=np.complex128)
    amps[k] = 1
    return make_state(n, amps)


def _bits(label: str) -> int:
    return int(label, 2)


def catalog_state(name: str, *params) -> PureState:
    """Named states: ghz, w, phi, bell k (0..3), xplus, xminus, basis n k."""
    name = name.lower()
    if name == "ghz":
        amps = np.zeros(8)
        amps[[_bits("000"), _bits("111")]] = 1 / np.sqrt(2)
        return make_state(3, amps)
    if name == "phi":
        amps = np.zeros(8)
        amps[[_bits("000"), _bits("110"), _bits("101"), _bits("011")]] = 0.5
        return make_state(3, amps)
    if name == "w":
        amps = np.zeros(8)
        amps[[_bits("100"), _bits("010"), _bits("001")]] = 1 / np.sqrt(3)
        return make_state(3, amps)
    if name == "bell":
        k = int(params[0]) if params else 0
        s = 1 / np.sqrt(2)
        table = [(s, 0, 0, s), (s, 0, 0, -s), (0, s, s, 0), (0, s, -s, 0)]
        if not 0 <= k < 4:
            raise ValueError("bell index must be 0..3")
        return make_state(2, table[k])
    if name == "xplus":
        return make_state(1, HADAMARD_BASIS[0])
    if name == "xminus":
        return make_state(1, HADAMARD_BASIS[1])
    if name == "basis":
        n, k = (int(p) for p in params)
        return basis_state(n, k)
    raise KeyError(f"unknown state {name!r}; catalog: {', '.join(STATE_NAMES)}")


STATE_NAMES = ("ghz", "w", "phi", "bell", "xplus", "xminus", "basis")


def product(*states) -> PureState:
    amps = np.ones(1, dtype=np.complex128)
    for s in states:
        amps = np.kron(amps, _vec(s))
    return make_state(int(amps.size).bit_length() - 1, amps)


def concurrence(s) -> float | np.ndarray:
    """C = 2|ad - bc|; broadcasts over leading axes of a (..., 4) array."""
    v = _two_qubit(s)
    c = 2 * np.abs(v[..., 0] * v[..., 3] - v[..., 1] * v[..., 2])
    return float(c) if c.ndim == 0 else c


def concurrence_sigma_y(s) -> float:
    """|<psi*| sigma_y (x) sigma_y |psi>|, the spin-flip form."""
    v = _two_qubit(s)
    return float(abs(v @ SIGMA_Y2 @ v))


def reduced_density(s, keep: str = "A") -> np.ndarray:
    v = _two_qubit(s).reshape(2, 2)
    if keep.upper() == "A":
        return v @ v.conj().T
    if keep.upper() == "B":
        return v.T @ v.conj()
    raise ValueError("keep must be 'A' or 'B'")


def _check_density(rho) -> np.ndarray:
    rho = as_square(rho)
    if rho.shape != (2, 2):
        raise DimensionError("expected a 2x2 density matrix")
    if np.max(np.abs(rho - rho.conj().T)) > ATOL or abs(np.trace(rho) - 1) > ATOL:
        raise ValueError("not a Hermitian unit-trace matrix")
    return rho


def _spectrum(rho) -> np.ndarray:
    lam = np.linalg.eigvalsh(_check_density(rho))
    if lam.min() < -ATOL:
        raise ValueError("density matrix has a negative eigenvalue")
    return np.clip(lam, 0.0, 1.0)


def linear_entropy(rho) -> float:
    rho = _check_density(rho)
    return float(1 - np.real(np.trace(rho @ rho)))


def von_neumann_entropy(rho) -> float:
    """-tr(rho ln rho) in nats; maximum ln 2 for a qubit."""
    lam = _spectrum(rho)
    lam = lam[lam > 0]
    return float(-np.sum(lam * np.log(lam)))


def schmidt_lambdas(c: float) -> tuple[float, float]:
    if c < -1e-12 or c > 1 + 1e-12:
        raise ValueError(f"concurrence {c} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    r = np.sqrt(1 - c * c)
    return (0.5 * (1 + r), 0.5 * (1 - r))


def apply_gate(s, gate, targets) -> PureState:
    """Apply a 2x2 gate to one qubit or a 4x4 gate to an ordered qubit pair.

    ``targets`` holds 1-based qubit indices; an int is a single target.
    """
    v = _vec(s)
    n = int(v.size).bit_length() - 1
    g = as_square(gate)
    targets = (targets,) if np.isscalar(targets) else tuple(targets)
    if g.shape[0] != 2 ** len(targets):
        raise DimensionError(f"gate of dim {g.shape[0]} does not fit {len(targets)} target(s)")
    if len(set(targets)) != len(targets) or any(not 1 <= t <= n for t in targets):
        raise ValueError(f"bad target qubits {targets} for a {n}-qubit state")
    if not is_unitary(g):
        raise ValueError("gate is not unitary")
    k = len(targets)
    axes = [t - 1 for t in targets]
    psi = np.moveaxis(v.reshape((2,) * n), axes, range(k))
    psi = (g @ psi.reshape(2**k, -1)).reshape((2,) * n)
    psi = np.moveaxis(psi, range(k), axes)
    return make_state(n, psi.ravel())


def apply_local(s, *ops) -> PureState:
    """Apply one single-qubit operator per qubit (a full tensor product)."""
    out = _vec(s)
    for i, op in enumerate(ops, start=1):
        out = apply_gate(out, op, i).amplitudes
    return make_state(len(ops), out)


def fidelity(a, b) -> float:
    return float(abs(np.vdot(_vec(a), _vec(b))))


def measure_qubit(s, qubit: int, basis=COMPUTATIONAL) -> list[MeasurementRecord]:
    """Projective measurement of one qubit (1-based) in an orthonormal basis.

    Returns one record per outcome. An outcome with probability below 1e-12
    is impossible and carries no residual state.
    """
    v = _vec(s)
    n = int(v.size).bit_length() - 1
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} out of range for {n} qubits")
    if n < 2:
        raise ValueError("need at least 2 qubits to leave a residual state")
    b = np.array([np.asarray(x, dtype=np.complex128).ravel() for x in basis])
    if b.shape != (2, 2) or np.max(np.abs(b.conj() @ b.T - np.eye(2))) > ATOL:
        raise ValueError("measurement basis is not orthonormal")
    psi = np.moveaxis(v.reshape((2,) * n), qubit - 1, 0).reshape(2, -1)
    records = []
    for k in range(2):
        rest = b[k].conj() @ psi
        p = float(np.real(np.vdot(rest, rest)))
        residual = make_state(n - 1, rest / np.sqrt(p)) if p > IMPOSSIBLE else None
        records.append(MeasurementRecord(k, p, residual))
    return records
