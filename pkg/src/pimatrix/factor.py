"""Canonical factorizations of partial isometries.

Every partial isometry of rank r factors as U @ X_r @ V* with U, V unitary
and X_r = diag(1,...,1,0,...,0); everything else here (compression to the
initial space, polar forms, unitary extensions, the pseudoinverse test)
derives from that singular decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CFG, ToleranceCfg, approx_eq, as_matrix, numeric_rank, svd
from .errors import NotPartialIsometry

__all__ = [
    "SvdCanonical",
    "svd_canonical",
    "compress_to_N",
    "block_form",
    "polar_factor",
    "unitary_extension",
    "pi_polar",
    "pseudoinverse",
    "is_pi_via_pseudoinverse",
]


@dataclass(frozen=True)
class SvdCanonical:
    """Unitaries U, V and rank r with ``A = U @ X_r @ V*``."""

    u: np.ndarray
    rank: int
    v: np.ndarray

    @property
    def n(self) -> int:
        return self.u.shape[0]

    def x_r(self) -> np.ndarray:
        d = np.zeros(self.n)
        d[: self.rank] = 1.0
        return np.diag(d).astype(complex)

    def reconstruct(self) -> np.ndarray:
        return self.u @ self.x_r() @ self.v.conj().T


def _require_pi(a: np.ndarray, cfg: ToleranceCfg) -> None:
    from .predicates import is_partial_isometry

    if not is_partial_isometry(a, cfg):
        raise NotPartialIsometry("input is not a partial isometry")


def svd_canonical(a, cfg: ToleranceCfg = DEFAULT_CFG) -> SvdCanonical:
    """Factor a partial isometry as U @ X_r @ V* (singular values snapped to 0/1)."""
    a = as_matrix(a)
    _require_pi(a, cfg)
    u, s, v = svd(a)
    r = 0 if (s.size == 0 or s[0] == 0.0) else int(np.count_nonzero(s > 0.5))
    return SvdCanonical(u=u, rank=r, v=v)


def compress_to_N(a, cfg: ToleranceCfg = DEFAULT_CFG) -> tuple[np.ndarray, np.ndarray]:
    """Unitary Q and the n x r matrix N with ``Q* @ A @ Q == [N | 0]``.

    Q is the right singular basis; N has orthonormal columns spanning the
    compressed range.
    """
    can = svd_canonical(a, cfg)
    q = can.v
    n_block = (q.conj().T @ can.u)[:, : can.rank]
    return q, n_block


def block_form(a, cfg: ToleranceCfg = DEFAULT_CFG) -> tuple[np.ndarray, np.ndarray]:
    """Split N into the top r x r block B and bottom (n-r) x r block C.

    The columns of [B; C] are orthonormal, so B* @ B + C* @ C == I_r.
    """
    a = as_matrix(a)
    _, nb = compress_to_N(a, cfg)
    r = nb.shape[1]
    return nb[:r, :], nb[r:, :]


def polar_factor(a, cfg: ToleranceCfg = DEFAULT_CFG) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Polar pieces (W, P, Q) of a partial isometry.

    W = U @ V* is unitary, P = A*A projects onto the initial space,
    Q = AA* onto the range, and A == W @ P == Q @ W.
    """
    can = svd_canonical(a, cfg)
    w = can.u @ can.v.conj().T
    xr = can.x_r()
    p = can.v @ xr @ can.v.conj().T
    q = can.u @ xr @ can.u.conj().T
    return w, p, q


def unitary_extension(a, cfg: ToleranceCfg = DEFAULT_CFG) -> np.ndarray:
    """A unitary agreeing with the partial isometry on its initial space."""
    w, _, _ = polar_factor(a, cfg)
    return w


def pi_polar(a, cfg: ToleranceCfg = DEFAULT_CFG) -> tuple[np.ndarray, np.ndarray]:
    """Factor any square matrix as E @ R with E a partial isometry, R = |A|.

    E = U @ X_r @ V* keeps the rank of A; R = V @ Sigma @ V* is PSD. This is
    the polar decomposition with the unitary replaced by a partial isometry
    of matching rank.
    """
    a = as_matrix(a)
    u, s, v = svd(a)
    r = numeric_rank(a, cfg)
    d = np.zeros(a.shape[0])
    d[:r] = 1.0
    e = (u * d) @ v.conj().T
    rmat = (v * s) @ v.conj().T
    return e, rmat


def pseudoinverse(a, cfg: ToleranceCfg = DEFAULT_CFG) -> np.ndarray:
    """Moore-Penrose pseudoinverse via the singular decomposition."""
    a = as_matrix(a)
    u, s, v = svd(a)
    cut = cfg.rank_rel_tol * s[0] if (s.size and s[0] > 0.0) else np.inf
    sinv = np.where(s > cut, 1.0 / np.where(s > cut, s, 1.0), 0.0)
    return (v * sinv) @ u.conj().T


def is_pi_via_pseudoinverse(a, cfg: ToleranceCfg = DEFAULT_CFG) -> bool:
    """Independent detection route: A is a partial isometry iff pinv(A) == A*."""
    a = as_matrix(a)
    return approx_eq(pseudoinverse(a, cfg), a.conj().T, cfg)
