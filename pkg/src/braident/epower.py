"""
Entangling power: mean linear entropy C^2/2 of U|psi>|psi'> over independent
Bloch-uniform single-qubit states.

Single-qubit states are parameterised as
``(cos(theta/2) e^{-i phi/2}, sin(theta/2) e^{i phi/2})``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .gates import _mat, delta

MIN_THETA = 8
MIN_PHI = 16
MC_MIN_SAMPLES = 1000
MC_CHUNK = 1 << 16


@dataclass(frozen=True)
class EPowerEstimate:
    value: float
    method: str
    stderr: float | None = None
    nodes_or_samples: int = 0


def _bloch_states(cos_theta, phi) -> np.ndarray:
    half = np.arccos(np.clip(cos_theta, -1.0, 1.0)) / 2
    return np.stack([np.cos(half) * np.exp(-0.5j * phi),
                     np.sin(half) * np.exp(0.5j * phi)], axis=-1)


def _output_linear_entropy(u, psi, chi) -> np.ndarray:
    """C^2/2 of u (psi (x) chi) for paired rows of psi and chi."""
    pairs = (psi[:, :, None] * chi[:, None, :]).reshape(-1, 4)
    out = pairs @ u.T
    c = 2 * np.abs(out[:, 0] * out[:, 3] - out[:, 1] * out[:, 2])
    return 0.5 * c * c


def entangling_power_quadrature(u, n_theta: int = 16, n_phi: int = 32) -> EPowerEstimate:
    """Gauss-Legendre in cos(theta), trapezoid in phi, for both qubits.

    The integrand is a trigonometric polynomial of low degree, so the default
    grid integrates catalog gates to rounding error.
    """
    if n_theta < MIN_THETA or n_phi < MIN_PHI:
        raise ValueError(f"need n_theta >= {MIN_THETA} and n_phi >= {MIN_PHI}")
    u = _mat(u)
    x, w = leggauss(n_theta)
    phi = 2 * np.pi * np.arange(n_phi) / n_phi
    xs, ps = np.meshgrid(x, phi, indexing="ij")
    single = _bloch_states(xs.ravel(), ps.ravel())
    weights = np.repeat(w / 2, n_phi) / n_phi
    n = len(weights)
    psi = np.repeat(single, n, axis=0)
    chi = np.tile(single, (n, 1))
    vals = _output_linear_entropy(u, psi, chi).reshape(n, n)
    value = float(weights @ vals @ weights)
    return EPowerEstimate(value, "quadrature", None, n * n)


def entangling_power_mc(u, samples: int = 1_000_000, seed: int = 0) -> EPowerEstimate:
    """Seeded Monte Carlo estimate with its standard error.

    Samples are drawn in chunks of 65536; chunk ``k`` uses the generator
    ``default_rng(SeedSequence(seed).spawn(...)[k])`` and draws, in order,
    cos(theta), phi for the first qubit, then for the second. Partial sums are
    reduced in chunk order, so results are bit-reproducible.
    """
    if samples < MC_MIN_SAMPLES:
        raise ValueError(f"need at least {MC_MIN_SAMPLES} samples")
    u = _mat(u)
    n_chunks = -(-samples // MC_CHUNK)
    total = 0.0
    total_sq = 0.0
    for k, ss in enumerate(np.random.SeedSequence(seed).spawn(n_chunks)):
        size = min(MC_CHUNK, samples - k * MC_CHUNK)
        rng = np.random.default_rng(ss)
        psi = _bloch_states(rng.uniform(-1, 1, size), rng.uniform(0, 2 * np.pi, size))
        chi = _bloch_states(rng.uniform(-1, 1, size), rng.uniform(0, 2 * np.pi, size))
        e = _output_linear_entropy(u, psi, chi)
        total += float(e.sum())
        total_sq += float((e * e).sum())
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0) * samples / (samples - 1)
    return EPowerEstimate(mean, "monte-carlo", float(np.sqrt(var / samples)), samples)


CLOSED_FORM_NAMES = ("cnot", "r", "rprime0", "u_phi", "rprime", "sqrt_swap", "swap")


def entangling_power_closed_form(name: str, params=()) -> EPowerEstimate:
    key = name.lower()
    if key in ("cnot", "r", "rprime0", "u_phi"):
        value = 2 / 9
    elif key == "rprime":
        if len(params) != 4:
            raise ValueError("rprime needs four phases a, b, c, d")
        value = abs(1 - delta(*params)) ** 2 / 18
    elif key == "sqrt_swap":
        value = 1 / 6
    elif key == "swap":
        value = 0.0
    else:
        raise KeyError(f"no closed form for {name!r}; use the quadrature method")
    return EPowerEstimate(value, "closed-form", None, 0)
