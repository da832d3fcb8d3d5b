"""
Small dense complex linear algebra.

Matrices are plain ``complex128`` numpy arrays of shape ``(n, n)``. The tensor
product convention is the one numpy's ``kron`` uses: ``|i> (x) |j>`` maps to
basis index ``i * dim_b + j``, so the two-qubit computational basis is ordered
``|00>, |01>, |10>, |11>`` with qubit 1 as the most significant bit.
"""

from __future__ import annotations

import numpy as np

ATOL = 1e-10
MAX_DET_DIM = 8


class DimensionError(ValueError):
    pass


class NumericalFailure(ArithmeticError):
    """Raised when an iterative routine does not meet its residual bound."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = residuals


def as_square(a) -> np.ndarray:
    """Coerce to a finite square complex array, or raise."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def frozen(a) -> np.ndarray:
    m = as_square(a).copy()
    m.flags.writeable = False
    return m


def identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=np.complex128)


def matmul(a, b) -> np.ndarray:
    a, b = as_square(a), as_square(b)
    if a.shape != b.shape:
        raise DimensionError(f"dimension mismatch: {a.shape[0]} vs {b.shape[0]}")
    return a @ b


def kron(a, b) -> np.ndarray:
    return np.kron(as_square(a), as_square(b))


def kron_all(*factors) -> np.ndarray:
    out = np.ones((1, 1), dtype=np.complex128)
    for f in factors:
        out = np.kron(out, f)
    return out


def dagger(a) -> np.ndarray:
    return as_square(a).conj().T


def transpose(a) -> np.ndarray:
    return as_square(a).T.copy()


def trace(a) -> complex:
    return complex(np.trace(as_square(a)))


def determinant(a) -> complex:
    m = as_square(a)
    n = m.shape[0]
    if n > MAX_DET_DIM:
        raise DimensionError(f"determinant supported up to dim {MAX_DET_DIM}, got {n}")
    if n == 1:
        return complex(m[0, 0])
    if n == 2:
        return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])
    return complex(np.linalg.det(m))


def max_abs(a) -> float:
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


def allclose(a, b, tol: float = ATOL) -> bool:
    """Entrywise max-norm comparison."""
    return max_abs(np.asarray(a) - np.asarray(b)) <= tol


def is_unitary(a, tol: float = ATOL) -> bool:
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = as_square(a)
    return max_abs(m.conj().T @ m - identity(m.shape[0])) <= tol


def charpoly4(a) -> np.ndarray:
    """Monic characteristic polynomial coefficients, highest degree first.

    Built from power traces with Newton's identities.
    """
    m = as_square(a)
    if m.shape[0] != 4:
        raise DimensionError(f"charpoly4 needs a 4x4 matrix, got dim {m.shape[0]}")
    p = []
    mk = identity(4)
    for _ in range(4):
        mk = mk @ m
        p.append(np.trace(mk))
    e = [1.0 + 0j]
    for k in range(1, 5):
        s = sum((-1) ** (i - 1) * e[k - i] * p[i - 1] for i in range(1, k + 1))
        e.append(s / k)
    return np.array([(-1) ** k * e[k] for k in range(5)], dtype=np.complex128)


def durand_kerner(coeffs, maxiter: int = 500, tol: float = 1e-14) -> np.ndarray:
    """Roots of a monic polynomial by simultaneous (Weierstrass) iteration,
    finished with a few Newton steps per root."""
    c = np.asarray(coeffs, dtype=np.complex128)
    n = len(c) - 1
    radius = 1 + np.max(np.abs(c[1:]))
    z = radius * (0.4 + 0.9j) ** np.arange(n)
    for _ in range(maxiter):
        vals = np.polyval(c, z)
        diffs = z[:, None] - z[None, :]
        np.fill_diagonal(diffs, 1.0)
        step = vals / np.prod(diffs, axis=1)
        z = z - step
        if np.max(np.abs(step)) < tol * max(1.0, np.max(np.abs(z))):
            break
    dc = np.polyder(c)
    for _ in range(3):
        d = np.polyval(dc, z)
        ok = np.abs(d) > 1e-300
        z[ok] = z[ok] - np.polyval(c, z[ok]) / d[ok]
    return z


def eigenvalues4(a, method: str = "lapack", rtol: float = 1e-10) -> list[complex]:
    """The four eigenvalues of a 4x4 matrix, order unspecified.

    Every root is checked against ``|det(a - lam I)| <= rtol * scale`` where
    ``scale`` is ``max(1, ||a||)**4``; failure raises NumericalFailure.

    ``method="durand-kerner"`` runs the polynomial route instead. It loses
    accuracy at repeated eigenvalues (error ~ eps**(1/k) for multiplicity k),
    so it is kept as an independent cross-check only.
    """
    m = as_square(a)
    if m.shape[0] != 4:
        raise DimensionError(f"eigenvalues4 needs a 4x4 matrix, got dim {m.shape[0]}")
    if method == "lapack":
        lam = np.linalg.eigvals(m)
    elif method == "durand-kerner":
        lam = durand_kerner(charpoly4(m))
    else:
        raise ValueError(f"unknown method {method!r}")
    scale = max(1.0, float(np.linalg.norm(m, 2))) ** 4
    residuals = [abs(np.linalg.det(m - z * identity(4))) / scale for z in lam]
    if max(residuals) > rtol:
        raise NumericalFailure("eigenvalue residual above bound", residuals)
    return [complex(z) for z in lam]
