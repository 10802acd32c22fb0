"""Finite Blaschke products, Takenaka bases and matrix models.

A defect-one completely non-unitary partial isometry with nonzero eigenvalues
lambda_1..lambda_{n-1} (inside the disk) is modelled by compression of
multiplication by z onto the n-dimensional space spanned by the Takenaka
functions of B(z) = z * prod_j (z - lambda_j)/(1 - conj(lambda_j) z). The
model matrix below is that compression written in the Takenaka basis; it is
upper triangular with diagonal (0, lambda_1, ..., lambda_{n-1}).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CFG, ToleranceCfg
from .errors import IndexOutOfRange, InputOutOfDisk, RootOffCircle

__all__ = [
    "BlaschkeProduct",
    "ModelParams",
    "blaschke_eval",
    "blaschke_preimages",
    "takenaka_eval",
    "model_matrix",
    "kernel_eval",
    "circle_nodes",
    "circle_inner",
]


@dataclass(frozen=True)
class BlaschkeProduct:
    """z^zero_order times the Blaschke factors of the listed zeros."""

    zero_order: int
    zeros: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.zero_order < 0:
            raise ValueError("zero_order must be >= 0")
        zs = tuple(complex(z) for z in self.zeros)
        for z in zs:
            if abs(z) >= 1.0:
                raise InputOutOfDisk(f"Blaschke zero {z} must lie strictly inside the disk")
        object.__setattr__(self, "zeros", zs)
        if self.degree == 0:
            raise ValueError("degree must be >= 1")

    @property
    def degree(self) -> int:
        return self.zero_order + len(self.zeros)


@dataclass(frozen=True)
class ModelParams:
    """Nonzero-part eigenvalue list (lambda_1, ..., lambda_{n-1}), all in the open disk."""

    lambdas: tuple[complex, ...]

    def __post_init__(self) -> None:
        zs = tuple(complex(z) for z in self.lambdas)
        for z in zs:
            if abs(z) >= 1.0:
                raise InputOutOfDisk(f"model eigenvalue {z} must lie strictly inside the disk")
        object.__setattr__(self, "lambdas", zs)

    @property
    def n(self) -> int:
        return len(self.lambdas) + 1

    def blaschke(self) -> BlaschkeProduct:
        """B(z) = z * prod of the Blaschke factors (simple zero at the origin)."""
        return BlaschkeProduct(zero_order=1, zeros=self.lambdas)

    def boundary_blaschke(self) -> BlaschkeProduct:
        """b(z) = z^2 * prod of the Blaschke factors (degree n + 1)."""
        return BlaschkeProduct(zero_order=2, zeros=self.lambdas)


def blaschke_eval(b: BlaschkeProduct, z: complex) -> complex:
    out = complex(z) ** b.zero_order
    for lam in b.zeros:
        out *= (z - lam) / (1.0 - np.conj(lam) * z)
    return complex(out)


def blaschke_preimages(b: BlaschkeProduct, xi: complex, cfg: ToleranceCfg = DEFAULT_CFG) -> np.ndarray:
    """All deg(b) solutions of b(z) == xi on the unit circle, for |xi| == 1.

    Clears denominators to one polynomial and sends it through the companion
    matrix. Roots are projected back onto the circle; a root that needs more
    than 1e-6 of correction raises RootOffCircle.
    """
    xi = complex(xi)
    if abs(abs(xi) - 1.0) > cfg.unimodular_tol:
        raise ValueError(f"target {xi} must be unimodular")
    num = np.zeros(b.zero_order + 1, dtype=complex)
    num[0] = 1.0  # z^zero_order, highest-first coefficients
    for lam in b.zeros:
        num = np.polymul(num, np.array([1.0, -lam], dtype=complex))
    den = np.array([1.0], dtype=complex)
    for lam in b.zeros:
        den = np.polymul(den, np.array([-np.conj(lam), 1.0], dtype=complex))
    p = np.polysub(num, xi * den)
    roots = np.roots(p)
    if roots.size != b.degree:
        raise RootOffCircle(f"expected {b.degree} preimages, found {roots.size}")
    radii = np.abs(roots)
    if np.any(np.abs(radii - 1.0) > 1e-6):
        worst = float(np.max(np.abs(radii - 1.0)))
        raise RootOffCircle(f"a computed preimage strays {worst:.3g} from the circle")
    return roots / radii


def takenaka_eval(p: ModelParams, i: int, z: complex) -> complex:
    """Value of the i-th Takenaka basis function (1-based, i in 1..n).

    v_1 == 1; for i >= 2 the function carries the Blaschke factors of
    lambda_1..lambda_{i-2}, a simple zero at the origin and the reproducing
    factor of lambda_{i-1}.
    """
    n = p.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"basis index {i} outside 1..{n}")
    if i == 1:
        return 1.0 + 0.0j
    z = complex(z)
    lam_i = p.lambdas[i - 2]
    out = z * np.sqrt(1.0 - abs(lam_i) ** 2) / (1.0 - np.conj(lam_i) * z)
    for lam in p.lambdas[: i - 2]:
        out *= (z - lam) / (1.0 - np.conj(lam) * z)
    return complex(out)


def model_matrix(p: ModelParams) -> np.ndarray:
    """Compression of multiplication by z to the model space, Takenaka basis.

    Upper triangular with diagonal (0, lambda_1, ..., lambda_{n-1}); the
    strict upper part at (i, j), 0-based with lambda_0 = 0, is
    prod_{k=i+1}^{j-1}(-conj(lambda_k)) * sqrt(1-|lambda_i|^2) * sqrt(1-|lambda_j|^2).
    """
    lams = (0.0 + 0.0j,) + p.lambdas
    n = p.n
    out = np.zeros((n, n), dtype=complex)
    for i in range(n):
        out[i, i] = lams[i]
    for i in range(n):
        wi = np.sqrt(1.0 - abs(lams[i]) ** 2)
        for j in range(i + 1, n):
            pref = 1.0 + 0.0j
            for k in range(i + 1, j):
                pref *= -np.conj(lams[k])
            out[i, j] = pref * wi * np.sqrt(1.0 - abs(lams[j]) ** 2)
    return out


def kernel_eval(p: ModelParams, lam: complex, z: complex) -> complex:
    """Reproducing kernel of the model space at (lam, z), both inside the disk."""
    b = p.blaschke()
    blam = blaschke_eval(b, lam)
    bz = blaschke_eval(b, z)
    return complex((1.0 - np.conj(blam) * bz) / (1.0 - np.conj(lam) * z))


def circle_nodes(m: int = 512) -> np.ndarray:
    """m equispaced quadrature nodes on the unit circle."""
    return np.exp(2j * np.pi * np.arange(m) / m)


def circle_inner(f_vals: np.ndarray, g_vals: np.ndarray) -> complex:
    """Trapezoid (= uniform mean) inner product on the circle from sampled values."""
    f_vals = np.asarray(f_vals, dtype=complex)
    g_vals = np.asarray(g_vals, dtype=complex)
    return complex(np.mean(f_vals * np.conj(g_vals)))
