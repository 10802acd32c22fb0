"""Shared numerical kernel: tolerances, comparisons, decompositions, rank.

All matrices are dense square ``numpy.ndarray`` of ``complex128``. Functions
here are pure; tolerance knobs travel explicitly through a
:class:`ToleranceCfg` so concurrent callers can use different settings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from .errors import ConvergenceFailure, ShapeMismatch

__all__ = [
    "ToleranceCfg",
    "DEFAULT_CFG",
    "PolyC",
    "as_matrix",
    "approx_eq",
    "svd",
    "schur",
    "eigenvalues",
    "numeric_rank",
    "char_poly",
    "herm_sqrt",
    "multiset_pair_distance",
    "multiset_close",
]


@dataclass(frozen=True)
class ToleranceCfg:
    """Tolerance settings shared by every predicate and decomposition.

    abs_tol        absolute comparison floor for entrywise checks
    rank_rel_tol   singular values below ``rank_rel_tol * sigma_max`` count as 0
    unimodular_tol distance from the unit circle below which an eigenvalue is
                   treated as unimodular
    """

    abs_tol: float = 1e-10
    rank_rel_tol: float = 1e-8
    unimodular_tol: float = 1e-8

    def __post_init__(self) -> None:
        for name in ("abs_tol", "rank_rel_tol", "unimodular_tol"):
            v = getattr(self, name)
            if not (v > 0.0 and np.isfinite(v)):
                raise ValueError(f"{name} must be positive and finite, got {v!r}")

    @classmethod
    def from_env(cls) -> "ToleranceCfg":
        """Build a config from PIM_* environment overrides (decimal strings)."""
        kw = {}
        for name, env in (
            ("abs_tol", "PIM_ABS_TOL"),
            ("rank_rel_tol", "PIM_RANK_REL_TOL"),
            ("unimodular_tol", "PIM_UNIMODULAR_TOL"),
        ):
            raw = os.environ.get(env)
            if raw is not None:
                kw[name] = float(raw)
        return cls(**kw)


DEFAULT_CFG = ToleranceCfg()


def as_matrix(a) -> np.ndarray:
    """Validate and coerce input to a square complex matrix.

    Accepts anything ``np.asarray`` understands. Raises ShapeMismatch for
    non-square or non-2d input, ValueError for non-finite entries.
    """
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d array, got ndim={m.ndim}")
    if m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def approx_eq(a, b, cfg: ToleranceCfg = DEFAULT_CFG) -> bool:
    """Entrywise closeness scaled by the Frobenius norm of the first operand."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ShapeMismatch(f"shape mismatch: {a.shape} vs {b.shape}")
    scale = max(1.0, float(np.linalg.norm(a)))
    if a.size == 0:
        return True
    return float(np.max(np.abs(a - b))) <= cfg.abs_tol * scale


def svd(a) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular value decomposition ``a = U @ diag(s) @ V.conj().T``.

    Returns (U, s, V) with both U and V unitary and s descending.
    """
    a = as_matrix(a)
    try:
        u, s, vh = np.linalg.svd(a)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - exotic
        raise ConvergenceFailure(f"SVD did not converge: {exc}") from exc
    return u, s, vh.conj().T


def schur(a) -> tuple[np.ndarray, np.ndarray]:
    """Complex Schur form ``a = Q @ T @ Q.conj().T`` with T upper triangular."""
    a = as_matrix(a)
    if a.shape == (0, 0):
        return a.copy(), a.copy()
    try:
        t, q = sla.schur(a, output="complex")
    except sla.LinAlgError as exc:  # pragma: no cover - exotic
        raise ConvergenceFailure(f"Schur iteration failed: {exc}") from exc
    return t, q


def eigenvalues(a) -> np.ndarray:
    """Eigenvalues read off the diagonal of the complex Schur form."""
    t, _ = schur(a)
    return np.diag(t).copy()


def numeric_rank(a, cfg: ToleranceCfg = DEFAULT_CFG) -> int:
    """Number of singular values above ``rank_rel_tol * sigma_max``."""
    _, s, _ = svd(a)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > cfg.rank_rel_tol * s[0]))


@dataclass(frozen=True)
class PolyC:
    """Monic polynomial over the complexes, coefficients highest power first."""

    coeffs: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) < 2:
            raise ValueError("polynomial must have degree >= 1")
        if abs(self.coeffs[0] - 1.0) > 1e-12:
            raise ValueError("polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def from_roots(cls, roots) -> "PolyC":
        c = np.atleast_1d(np.poly(np.asarray(roots, dtype=complex)))
        c = c / c[0]
        return cls(tuple(complex(x) for x in c))

    def roots(self) -> np.ndarray:
        return np.roots(np.asarray(self.coeffs, dtype=complex))

    def __call__(self, z: complex) -> complex:
        return complex(np.polyval(np.asarray(self.coeffs, dtype=complex), z))

    def distance(self, other: "PolyC") -> float:
        """Max coefficient distance; inf when degrees differ."""
        if self.degree != other.degree:
            return float("inf")
        a = np.asarray(self.coeffs)
        b = np.asarray(other.coeffs)
        return float(np.max(np.abs(a - b)))

    def __str__(self) -> str:
        n = self.degree
        parts = []
        for k, c in enumerate(self.coeffs):
            p = n - k
            if abs(c) < 1e-14 and k > 0:
                continue
            mag = f"{c.real:.6g}" if abs(c.imag) < 1e-14 else f"({c.real:.6g}{c.imag:+.6g}i)"
            if p == 0:
                parts.append(mag)
            elif p == 1:
                parts.append("z" if k == 0 else f"{mag}*z")
            else:
                parts.append(f"z^{p}" if k == 0 else f"{mag}*z^{p}")
        return " + ".join(parts).replace("+ -", "- ")


def char_poly(a) -> PolyC:
    """Characteristic polynomial det(zI - a) from the Schur eigenvalues."""
    a = as_matrix(a)
    if a.shape[0] == 0:
        raise ShapeMismatch("characteristic polynomial needs n >= 1")
    return PolyC.from_roots(eigenvalues(a))


def herm_sqrt(h) -> np.ndarray:
    """Principal square root of a Hermitian PSD matrix (tiny negatives clipped)."""
    h = as_matrix(h)
    w, u = np.linalg.eigh((h + h.conj().T) / 2.0)
    w = np.clip(w, 0.0, None)
    return (u * np.sqrt(w)) @ u.conj().T


def multiset_pair_distance(xs, ys) -> float:
    """Greedy nearest-neighbour pairing cost between two complex multisets.

    Returns the largest pairing distance, or inf when the sizes differ.
    The greedy order is deterministic (descending modulus, then lexicographic).
    """
    xs = sorted(np.asarray(xs, dtype=complex), key=lambda z: (-abs(z), z.real, z.imag))
    ys = list(np.asarray(ys, dtype=complex))
    if len(xs) != len(ys):
        return float("inf")
    worst = 0.0
    for x in xs:
        j = min(range(len(ys)), key=lambda k: abs(x - ys[k]))
        worst = max(worst, abs(x - ys[j]))
        ys.pop(j)
    return worst


def multiset_close(xs, ys, tol: float) -> bool:
    return multiset_pair_distance(xs, ys) <= tol
