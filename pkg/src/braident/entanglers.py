"""
Perfect-entangler test, gate classification and the product-basis search.

A two-qubit gate is a perfect entangler iff the convex hull of the
eigenvalues of ``m(U)`` contains the origin.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize

from .gates import LOCAL_INVARIANTS, _mat, invariants, m_matrix
from .linalg import eigenvalues4
from .states import concurrence

HULL_TOL = 1e-9


class GateClass(enum.Enum):
    LOCAL = "Local"
    PERFECT_ENTANGLER = "PerfectEntangler"
    NON_PERFECT_NON_LOCAL = "NonPerfectNonLocal"

    def __str__(self):
        return self.value


def _segment_distance(p: complex, q: complex) -> float:
    d = q - p
    dd = abs(d) ** 2
    if dd == 0:
        return abs(p)
    t = min(max(-(p.real * d.real + p.imag * d.imag) / dd, 0.0), 1.0)
    return abs(p + t * d)


def _cross(u: complex, v: complex) -> float:
    return u.real * v.imag - u.imag * v.real


def _in_triangle(a: complex, b: complex, c: complex, min_area: float) -> bool:
    area = _cross(b - a, c - a)
    # slivers are left to the edge distances; their sign tests are rounding noise
    if abs(area) <= min_area:
        return False
    s1, s2, s3 = _cross(a, b) / area, _cross(b, c) / area, _cross(c, a) / area
    return s1 >= 0 and s2 >= 0 and s3 >= 0


def hull_distance(points) -> float:
    """Euclidean distance from 0 to the convex hull of up to 4 complex points."""
    pts = [complex(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    if len(pts) > 4:
        raise ValueError("at most 4 points are supported")
    if not all(np.isfinite(p.real) and np.isfinite(p.imag) for p in pts):
        raise ValueError("non-finite point")
    scale = max(abs(p) for p in pts)
    min_area = 1e-12 * scale * scale
    # Every point of the hull lies in some triangle of the points (Caratheodory).
    for a, b, c in itertools.combinations(pts, 3):
        if _in_triangle(a, b, c, min_area):
            return 0.0
    best = min(abs(p) for p in pts)
    for p, q in itertools.combinations(pts, 2):
        best = min(best, _segment_distance(p, q))
    return best


def hull_contains_zero(points, tol: float = HULL_TOL) -> bool:
    return hull_distance(points) <= tol


def m_eigenvalues(u) -> list[complex]:
    return eigenvalues4(m_matrix(u))


def is_perfect_entangler(u, tol: float = HULL_TOL) -> bool:
    return hull_contains_zero(m_eigenvalues(u), tol)


def classify(u, tol: float = HULL_TOL) -> GateClass:
    if invariants(u).distance(LOCAL_INVARIANTS) <= tol:
        return GateClass.LOCAL
    if is_perfect_entangler(u, tol):
        return GateClass.PERFECT_ENTANGLER
    return GateClass.NON_PERFECT_NON_LOCAL


@dataclass(frozen=True)
class ProductBasis:
    """Orthonormal product basis from three Bloch-sphere angle pairs.

    With (a, b), (c, d), (e, f) the qubit states set by each pair, the basis is
    (a,b)(x)(c,d), (b*,-a*)(x)(c,d), (e,f)(x)(d*,-c*), (f*,-e*)(x)(d*,-c*).
    """

    params: tuple[float, float, float, float, float, float]

    @staticmethod
    def _qubit(theta, phi):
        return np.array([np.cos(theta / 2), np.sin(theta / 2) * np.exp(1j * phi)])

    def states(self) -> np.ndarray:
        t1, p1, t2, p2, t3, p3 = self.params
        ab = self._qubit(t1, p1)
        cd = self._qubit(t2, p2)
        ef = self._qubit(t3, p3)

        def perp(v):
            return np.array([v[1].conjugate(), -v[0].conjugate()])

        return np.array([np.kron(ab, cd), np.kron(perp(ab), cd),
                         np.kron(ef, perp(cd)), np.kron(perp(ef), perp(cd))])

    @classmethod
    def computational(cls) -> "ProductBasis":
        return cls((0.0, 0.0, 0.0, 0.0, 0.0, 0.0))

    @classmethod
    def hadamard(cls) -> "ProductBasis":
        # |x+>|x+>, |x->|x+>, |x+>|x->, |x->|x-> up to phases
        return cls((np.pi / 2, 0.0, np.pi / 2, 0.0, np.pi / 2, 0.0))


def basis_images_min_concurrence(u, b: ProductBasis) -> float:
    out = b.states() @ _mat(u).T
    return float(np.min(concurrence(out)))


@dataclass(frozen=True)
class SearchResult:
    value: float
    basis: ProductBasis
    restart: int
    evaluations: int


def max_min_basis_search(u, restarts: int = 50, seed: int = 0,
                         xatol: float = 1e-8, maxfev: int = 2000) -> SearchResult:
    """Maximise the smallest output concurrence over orthonormal product bases.

    Nelder-Mead from ``restarts`` seeded random starts; restart ``k`` draws its
    start from ``SeedSequence(seed).spawn(restarts)[k]``. Ties go to the lowest
    restart index.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    u = _mat(u)

    def objective(x):
        return -basis_images_min_concurrence(u, ProductBasis(tuple(x)))

    best = None
    total = 0
    for k, ss in enumerate(np.random.SeedSequence(seed).spawn(restarts)):
        rng = np.random.default_rng(ss)
        x0 = rng.uniform(0, 2 * np.pi, 6)
        res = minimize(objective, x0, method="Nelder-Mead",
                       options={"xatol": xatol, "fatol": 1e-14, "maxfev": maxfev})
        total += res.nfev
        value = min(-float(res.fun), 1.0)
        if best is None or value > best[0]:
            best = (value, tuple(float(v) for v in res.x), k)
    return SearchResult(best[0], ProductBasis(best[1]), best[2], total)


def sqrt_swap_identity_residual(a, b, c, d) -> float:
    """||ad - bc|^2 + |conj(a) c + conj(b) d|^2 - 1| for normalised (a,b), (c,d)."""
    a, b, c, d = (complex(z) for z in (a, b, c, d))
    return abs(abs(a * d - b * c) ** 2 + abs(a.conjugate() * c + b.conjugate() * d) ** 2 - 1)
