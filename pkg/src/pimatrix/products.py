"""Products of partial isometries: closure tests and factor counts."""

from __future__ import annotations

import numpy as np

from .core import DEFAULT_CFG, ToleranceCfg, approx_eq, as_matrix, numeric_rank, svd
from .errors import NotContraction, NotPartialIsometry, ShapeMismatch
from .factor import pseudoinverse
from .predicates import is_partial_isometry

__all__ = ["product_is_pi", "chain_is_pi", "min_pi_factors", "kronecker"]


def product_is_pi(a, b, cfg: ToleranceCfg = DEFAULT_CFG) -> tuple[bool, float]:
    """Decide whether A @ B is a partial isometry via the commutator test.

    For partial isometries A and B the product is one exactly when the
    initial projection A*A commutes with the final projection BB*. Returns
    (verdict, commutator norm).
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"operands differ in size: {a.shape} vs {b.shape}")
    if not is_partial_isometry(a, cfg) or not is_partial_isometry(b, cfg):
        raise NotPartialIsometry("both factors must be partial isometries")
    p = a.conj().T @ a
    q = b @ b.conj().T
    comm = p @ q - q @ p
    norm = float(np.linalg.norm(comm, 2))
    return norm <= cfg.abs_tol * 100, norm


def chain_is_pi(mats, cfg: ToleranceCfg = DEFAULT_CFG) -> bool:
    """Whether the product A_1 @ ... @ A_k of partial isometries is one.

    Criterion: the pseudoinverse of the product equals the reversed product
    of adjoints A_k* @ ... @ A_1*.
    """
    mats = [as_matrix(m) for m in mats]
    if not mats:
        raise ShapeMismatch("need at least one factor")
    n = mats[0].shape[0]
    for m in mats:
        if m.shape[0] != n:
            raise ShapeMismatch("all factors must share one size")
        if not is_partial_isometry(m, cfg):
            raise NotPartialIsometry("every factor must be a partial isometry")
    prod = mats[0]
    for m in mats[1:]:
        prod = prod @ m
    rev = np.eye(n, dtype=complex)
    for m in mats:
        rev = m.conj().T @ rev
    return approx_eq(pseudoinverse(prod, cfg), rev, cfg)


def min_pi_factors(a, cfg: ToleranceCfg = DEFAULT_CFG) -> int | None:
    """Minimal number of partial-isometry factors needed to produce ``a``.

    Only contractions qualify. A contraction is such a product iff it is
    unitary (one factor suffices) or singular; invertible non-unitary
    contractions are not, and None is returned for them. For the singular
    case the count is ceil(rank(I - A*A) / defect(A)).
    """
    a = as_matrix(a)
    n = a.shape[0]
    _, s, _ = svd(a)
    if s.size and s[0] > 1.0 + 100 * cfg.abs_tol:
        raise NotContraction(f"operator norm {s[0]:.6g} exceeds 1")
    eye = np.eye(n, dtype=complex)
    defect_rank = numeric_rank(eye - a.conj().T @ a, cfg)
    if defect_rank == 0:
        return 1  # unitary
    kernel_dim = n - numeric_rank(a, cfg)
    if kernel_dim == 0:
        return None  # invertible but not unitary: no finite product works
    return -(-defect_rank // kernel_dim)


def kronecker(a, b) -> np.ndarray:
    """Kronecker product; partial isometries are closed under it."""
    return np.kron(as_matrix(a), as_matrix(b))
