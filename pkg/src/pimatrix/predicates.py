"""Partial-isometry detection and classification.

A square matrix A is a partial isometry when A @ A* @ A == A, equivalently
when every singular value is 0 or 1. The singular-value test is the primary
route; the triple-product residual serves as an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_CFG, PolyC, ToleranceCfg, as_matrix, char_poly, eigenvalues, svd
from .errors import NotPartialIsometry

__all__ = [
    "PIClassification",
    "is_partial_isometry",
    "projections",
    "defect",
    "classify",
]


def _sv_profile(s: np.ndarray, cfg: ToleranceCfg) -> tuple[bool, int]:
    """Classify a singular value vector; returns (all in {0,1}, count of ones)."""
    near_one = np.abs(s - 1.0) <= cfg.abs_tol * 100
    near_zero = s <= cfg.rank_rel_tol
    ok = bool(np.all(near_one | near_zero))
    return ok, int(np.count_nonzero(near_one))


def is_partial_isometry(a, cfg: ToleranceCfg = DEFAULT_CFG) -> bool:
    """True iff every singular value of ``a`` is within tolerance of 0 or 1."""
    a = as_matrix(a)
    _, s, _ = svd(a)
    ok, _ = _sv_profile(s, cfg)
    return ok


def projections(a, cfg: ToleranceCfg = DEFAULT_CFG) -> tuple[np.ndarray, np.ndarray]:
    """Initial and final projections (A*A, AA*) of a partial isometry.

    For a partial isometry both products are orthogonal projections: A*A
    projects onto the initial space (the orthogonal complement of the kernel)
    and AA* onto the range.
    """
    a = as_matrix(a)
    if not is_partial_isometry(a, cfg):
        raise NotPartialIsometry("projections are only meaningful for a partial isometry")
    return a.conj().T @ a, a @ a.conj().T


def defect(a, cfg: ToleranceCfg = DEFAULT_CFG) -> int:
    """Kernel dimension n - rank; the number of zero singular values."""
    a = as_matrix(a)
    _, s, _ = svd(a)
    n = a.shape[0]
    if s.size == 0 or s[0] == 0.0:
        return n
    return n - int(np.count_nonzero(s > cfg.rank_rel_tol * s[0]))


@dataclass(frozen=True)
class PIClassification:
    """Structural summary of a (candidate) partial isometry.

    rank + defect always equals the size; is_unitary implies is_pi and
    defect == 0; is_cnu means no unimodular eigenvalues remain.
    """

    is_pi: bool
    rank: int
    defect: int
    is_unitary: bool
    is_cnu: bool
    disk_spectrum: tuple[complex, ...]
    circle_spectrum: tuple[complex, ...]
    char: PolyC = field(repr=False)

    @property
    def n(self) -> int:
        return self.rank + self.defect


def classify(a, cfg: ToleranceCfg = DEFAULT_CFG) -> PIClassification:
    """Full report: PI verdict, rank/defect, unitarity, cnu-ness, spectrum split."""
    a = as_matrix(a)
    n = a.shape[0]
    _, s, _ = svd(a)
    ok, ones = _sv_profile(s, cfg)
    if ok:
        rank = ones
    else:
        rank = 0 if (s.size == 0 or s[0] == 0.0) else int(np.count_nonzero(s > cfg.rank_rel_tol * s[0]))
    eigs = eigenvalues(a)
    on_circle = np.abs(np.abs(eigs) - 1.0) <= cfg.unimodular_tol
    circle = tuple(complex(z) for z in eigs[on_circle])
    disk = tuple(complex(z) for z in eigs[~on_circle])
    is_uni = ok and rank == n
    return PIClassification(
        is_pi=ok,
        rank=rank,
        defect=n - rank,
        is_unitary=is_uni,
        is_cnu=ok and len(circle) == 0,
        disk_spectrum=disk,
        circle_spectrum=circle,
        char=char_poly(a) if n >= 1 else PolyC((1.0, 0.0)),
    )
