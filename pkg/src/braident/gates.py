"""
Two-qubit gate catalog and local invariants.

The invariants are the pair (G1, G2) computed from
``m(U) = (Q^dag U Q)^T (Q^dag U Q)`` where Q maps the computational basis to
the magic (Bell-with-phases) basis. Two gates with equal pairs are treated as
locally equivalent, i.e. related by single-qubit unitaries on both sides.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import as_square, determinant, frozen, is_unitary, kron

S2 = np.sqrt(2)

H = frozen(np.array([[1, 1], [1, -1]]) / S2)
PAULI_X = frozen([[0, 1], [1, 0]])
PAULI_Y = frozen([[0, -1j], [1j, 0]])
PAULI_Z = frozen([[1, 0], [0, -1]])

Q = frozen(np.array([[1, 0, 0, 1j],
                     [0, 1j, 1, 0],
                     [0, 1j, -1, 0],
                     [1, 0, 0, -1j]]) / S2)

IDENTITY = frozen(np.eye(4))
CNOT = frozen([[1, 0, 0, 0],
               [0, 1, 0, 0],
               [0, 0, 0, 1],
               [0, 0, 1, 0]])
SWAP = frozen([[1, 0, 0, 0],
               [0, 0, 1, 0],
               [0, 1, 0, 0],
               [0, 0, 0, 1]])
SQRT_SWAP = frozen([[1, 0, 0, 0],
                    [0, (1 + 1j) / 2, (1 - 1j) / 2, 0],
                    [0, (1 - 1j) / 2, (1 + 1j) / 2, 0],
                    [0, 0, 0, 1]])
R = frozen(np.array([[1, 0, 0, 1],
                     [0, 1, -1, 0],
                     [0, 1, 1, 0],
                     [-1, 0, 0, 1]]) / S2)
RPRIME0 = frozen([[1, 0, 0, 0],
                  [0, 0, 1, 0],
                  [0, -1, 0, 0],
                  [0, 0, 0, 1]])

UNIT_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Gate:
    name: str
    matrix: np.ndarray
    params: tuple = field(default=())

    def __post_init__(self):
        m = frozen(self.matrix)
        if m.shape != (4, 4):
            raise ValueError(f"gate {self.name!r} must be 4x4, got {m.shape}")
        if not is_unitary(m, UNIT_TOL):
            raise ValueError(f"gate {self.name!r} is not unitary")
        object.__setattr__(self, "matrix", m)

    def __array__(self, dtype=None, copy=None):
        return self.matrix if dtype is None else self.matrix.astype(dtype)


@dataclass(frozen=True)
class InvariantPair:
    g1: complex
    g2: complex

    def __iter__(self):
        yield self.g1
        yield self.g2

    def distance(self, other) -> float:
        return max(abs(self.g1 - other.g1), abs(self.g2 - other.g2))


def _mat(u) -> np.ndarray:
    return u.matrix if isinstance(u, Gate) else as_square(u)


def _phase(z, what) -> complex:
    z = complex(z)
    if abs(abs(z) - 1) > UNIT_TOL:
        raise ValueError(f"{what} must have unit modulus, got |{what}| = {abs(z):.12g}")
    return z


def rprime(a, b, c, d) -> np.ndarray:
    a, b, c, d = (_phase(z, n) for z, n in zip((a, b, c, d), "abcd"))
    return np.array([[a, 0, 0, 0],
                     [0, 0, b, 0],
                     [0, c, 0, 0],
                     [0, 0, 0, d]], dtype=np.complex128)


def u_phi(phi: float) -> np.ndarray:
    """exp(-i pi/4 YY - i phi ZZ)."""
    e, f = np.exp(-1j * phi), np.exp(1j * phi)
    return np.array([[e, 0, 0, 1j * e],
                     [0, f, -1j * f, 0],
                     [0, -1j * f, f, 0],
                     [1j * e, 0, 0, e]]) / S2


def controlled(v) -> np.ndarray:
    """Apply ``v`` to qubit 2 when qubit 1 is |1>."""
    v = as_square(v)
    if v.shape != (2, 2) or not is_unitary(v, UNIT_TOL):
        raise ValueError("controlled gate needs a 2x2 unitary")
    out = np.eye(4, dtype=np.complex128)
    out[2:, 2:] = v
    return out


_FIXED = {"identity": IDENTITY, "cnot": CNOT, "swap": SWAP, "sqrt_swap": SQRT_SWAP,
          "r": R, "rprime0": RPRIME0}
GATE_NAMES = tuple(_FIXED) + ("rprime", "u_phi", "controlled")


def catalog_gate(name: str, params=()) -> Gate:
    """Look up a gate by name.

    ``rprime`` takes four unit-modulus phases (a, b, c, d), ``u_phi`` one real
    angle, ``controlled`` the four entries of a 2x2 unitary in row-major order.
    """
    key = name.lower()
    params = tuple(params)
    if key in _FIXED:
        if params:
            raise ValueError(f"gate {key!r} takes no parameters")
        return Gate(key, _FIXED[key])
    if key == "rprime":
        if len(params) != 4:
            raise ValueError("rprime needs four phases a, b, c, d")
        return Gate(key, rprime(*params), tuple(complex(p) for p in params))
    if key == "u_phi":
        if len(params) != 1 or abs(complex(params[0]).imag) > 0:
            raise ValueError("u_phi needs one real angle")
        phi = complex(params[0]).real
        return Gate(key, u_phi(phi), (phi,))
    if key == "controlled":
        if len(params) != 4:
            raise ValueError("controlled needs the 4 entries of a 2x2 unitary")
        v = np.array(params, dtype=np.complex128).reshape(2, 2)
        return Gate(key, controlled(v), tuple(complex(p) for p in params))
    raise KeyError(f"unknown gate {name!r}; catalog: {', '.join(GATE_NAMES)}")


def q_matrix() -> np.ndarray:
    return Q


def m_matrix(u) -> np.ndarray:
    a = Q.conj().T @ _mat(u) @ Q
    return a.T @ a


def invariants(u) -> InvariantPair:
    mu = _mat(u)
    m = m_matrix(mu)
    det = determinant(mu)
    t = np.trace(m)
    return InvariantPair(complex(t * t / (16 * det)),
                         complex((t * t - np.trace(m @ m)) / (4 * det)))


def delta(a, b, c, d) -> complex:
    return complex(a) * complex(d) / (complex(b) * complex(c))


def invariants_rprime_closed_form(a, b, c, d) -> InvariantPair:
    a, b, c, d = (_phase(z, n) for z, n in zip((a, b, c, d), "abcd"))
    dl = delta(a, b, c, d)
    g1 = -(1 + dl) ** 2 / (4 * dl)
    return InvariantPair(g1, -1 + 2 * g1)


def invariants_u_phi(phi: float) -> InvariantPair:
    return InvariantPair(0j, complex(np.cos(4 * phi)))


LOCAL_INVARIANTS = InvariantPair(1 + 0j, 3 + 0j)


def locally_equivalent(u, v, tol: float = 1e-9) -> bool:
    return invariants(u).distance(invariants(v)) <= tol


def controlled_relation_residual(v) -> float:
    """|G2 - 1 - 2 G1| for the controlled-v gate."""
    g = invariants(controlled(v))
    return abs(g.g2 - 1 - 2 * g.g1)


def random_unitary(dim: int, rng) -> np.ndarray:
    """Haar-random unitary via QR of a complex Ginibre matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / S2
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_local(rng) -> np.ndarray:
    return kron(random_unitary(2, rng), random_unitary(2, rng))

