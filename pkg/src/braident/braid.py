"""
Braid group representations from a braid operator on V (x) V.

A braid word is a sequence of signed generator indices: ``+i`` is sigma_i and
``-i`` its inverse. Words compose left to right; each new letter is stacked on
top of the braid built so far, which is right multiplication of the
accumulated matrix. For example ``(1, 2)`` represents
``rep(sigma_1) @ rep(sigma_2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .linalg import DimensionError, as_square, is_unitary, max_abs

MAX_DIM = 1024
EXACT_TOL = 1e-12
USER_TOL = 1e-10


class RelationCheck(NamedTuple):
    holds: bool
    residual: float


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("a braid needs at least 2 strands")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if not 1 <= abs(x) <= self.strands - 1:
                raise ValueError(f"letter {x} out of range for {self.strands} strands")

    def __add__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))


def local_dim(r) -> int:
    n = as_square(r).shape[0]
    d = math.isqrt(n)
    if d * d != n:
        raise DimensionError(f"dimension {n} is not a perfect square")
    return d


def swap_matrix(d: int) -> np.ndarray:
    """P|i, j> = |j, i> on C^d (x) C^d."""
    p = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            p[j * d + i, i * d + j] = 1
    return p


def generator_rep(i: int, n: int, r) -> np.ndarray:
    """I^(i-1) (x) r (x) I^(n-i-1) on n strands."""
    r = as_square(r)
    d = local_dim(r)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    if d**n > MAX_DIM:
        raise MemoryError(f"{n} strands of dimension {d} exceed the {MAX_DIM} cap")
    if not is_unitary(r, USER_TOL):
        raise ValueError("braid operator must be unitary")
    return np.kron(np.kron(np.eye(d ** (i - 1)), r), np.eye(d ** (n - i - 1)))


def word_rep(w: BraidWord, r) -> np.ndarray:
    r = as_square(r)
    d = local_dim(r)
    gens = {}
    out = np.eye(d**w.strands, dtype=np.complex128)
    for x in w.letters:
        if x not in gens:
            g = generator_rep(abs(x), w.strands, r)
            gens[x] = g if x > 0 else g.conj().T
        out = out @ gens[x]
    return out


def braid_residual(r) -> float:
    r = as_square(r)
    d = local_dim(r)
    if d > 4:
        raise DimensionError("local dimension above 4 is not supported")
    i = np.eye(d)
    a, b = np.kron(r, i), np.kron(i, r)
    return max_abs(a @ b @ a - b @ a @ b)


def check_braid_relation(r, tol: float = EXACT_TOL) -> RelationCheck:
    res = braid_residual(r)
    return RelationCheck(res <= tol, res)


def yang_baxter_residual(rhat) -> float:
    rhat = as_square(rhat)
    d = local_dim(rhat)
    if d > 4:
        raise DimensionError("local dimension above 4 is not supported")
    i = np.eye(d)
    r12 = np.kron(rhat, i)
    r23 = np.kron(i, rhat)
    p23 = np.kron(i, swap_matrix(d))
    r13 = p23 @ r12 @ p23
    return max_abs(r12 @ r13 @ r23 - r23 @ r13 @ r12)


def check_yang_baxter(rhat, tol: float = EXACT_TOL) -> RelationCheck:
    res = yang_baxter_residual(rhat)
    return RelationCheck(res <= tol, res)


def to_braid_operator(rhat) -> np.ndarray:
    rhat = as_square(rhat)
    return swap_matrix(local_dim(rhat)) @ rhat


def generalized_rprime(m) -> np.ndarray:
    """R'_{ij,kl} = M_ij delta_il delta_jk, i.e. R'|j, i> = M_ij |i, j>."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError("M must be a square d x d matrix")
    d = m.shape[0]
    if d > 4:
        raise DimensionError("local dimension above 4 is not supported")
    if np.max(np.abs(np.abs(m) - 1)) > 1e-10:
        raise ValueError("every entry of M must have unit modulus")
    out = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            out[i * d + j, j * d + i] = m[i, j]
    return out
