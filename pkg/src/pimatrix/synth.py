"""Synthesis of partial isometries with prescribed spectral data.

Two constructions: an inductive bordering that realizes any admissible
eigenvalue multiset (closed unit disk, zero present unless everything is
unimodular), and an upper-triangular form with prescribed diagonal
(0, xi_1, ..., xi_{n-1}) and nonvanishing superdiagonal. Both return upper
triangular matrices, so the produced eigenvalues are exact.
"""

from __future__ import annotations

import numpy as np

from .core import DEFAULT_CFG, ToleranceCfg, svd
from .errors import InputOutOfDisk, NotRealizable

__all__ = ["synth_from_roots", "synth_superdiagonal", "weyl_horn_feasible"]


def _zero_sv_vector(a: np.ndarray) -> np.ndarray:
    """Unit vector spanning part of ran(a)^perp, phase-normalized."""
    u, s, _ = svd(a)
    n = a.shape[0]
    r = int(np.count_nonzero(s > 0.5)) if s.size else 0
    if r >= n:
        raise NotRealizable("no room left: the current block has full rank")
    z = u[:, r].copy()
    k = int(np.argmax(np.abs(z)))
    ph = z[k] / abs(z[k])
    return z / ph


def _border(a: np.ndarray, lam: complex) -> np.ndarray:
    """Append eigenvalue lam: [[a, z], [0, lam]] with |z|^2 = 1 - |lam|^2."""
    n = a.shape[0]
    z = _zero_sv_vector(a) * np.sqrt(max(0.0, 1.0 - abs(lam) ** 2))
    out = np.zeros((n + 1, n + 1), dtype=complex)
    out[:n, :n] = a
    out[:n, n] = z
    out[n, n] = lam
    return out


def synth_from_roots(roots, cfg: ToleranceCfg = DEFAULT_CFG) -> np.ndarray:
    """Build a partial isometry whose characteristic roots are ``roots``.

    Admissible multisets: every root in the closed unit disk, and at least
    one root equal to zero unless all roots are unimodular (in which case
    the result is the diagonal unitary). Raises NotRealizable otherwise.
    """
    roots = [complex(z) for z in roots]
    if not roots:
        raise NotRealizable("need at least one root")
    for z in roots:
        if abs(z) > 1.0 + cfg.unimodular_tol:
            raise NotRealizable(f"root {z} lies outside the closed unit disk")
    circle = [z for z in roots if abs(abs(z) - 1.0) <= cfg.unimodular_tol]
    disk = [z for z in roots if abs(abs(z) - 1.0) > cfg.unimodular_tol]
    if not disk:
        return np.diag(np.asarray(circle, dtype=complex))
    zeros = [z for z in disk if abs(z) <= cfg.abs_tol]
    if not zeros:
        raise NotRealizable("a root at zero is required alongside non-unimodular roots")
    # Seed: unitary part (if any) plus one zero; then border on the remaining
    # disk roots, largest modulus first.
    disk_sorted = sorted(disk, key=lambda z: (-abs(z), z.real, z.imag))
    seed_zero = disk_sorted.pop()  # smallest modulus = a zero
    assert abs(seed_zero) <= cfg.abs_tol
    a = np.zeros((len(circle) + 1, len(circle) + 1), dtype=complex)
    if circle:
        a[:-1, :-1] = np.diag(np.asarray(circle, dtype=complex))
    for lam in disk_sorted:
        a = _border(a, lam)
    return a


def synth_superdiagonal(xis, cfg: ToleranceCfg = DEFAULT_CFG) -> np.ndarray:
    """Upper-triangular partial isometry with diagonal (0, xi_1, ..., xi_k).

    Each xi must lie strictly inside the unit disk. The superdiagonal comes
    out nonzero, which pins the similarity class: one nilpotent-rooted chain
    per maximal constant run of the diagonal.
    """
    xis = [complex(x) for x in xis]
    for x in xis:
        if abs(x) >= 1.0 - cfg.unimodular_tol:
            raise InputOutOfDisk(f"diagonal value {x} is not strictly inside the disk")
    a = np.zeros((1, 1), dtype=complex)
    for x in xis:
        a = _border(a, x)
    return a


def weyl_horn_feasible(sigmas, lambdas, cfg: ToleranceCfg = DEFAULT_CFG) -> bool:
    """Multiplicative majorization test between singular values and eigenvalues.

    sigmas descending, lambdas in any order (sorted internally by modulus):
    feasible iff prod(sigma) == prod|lambda| and every prefix satisfies
    prod_k sigma >= prod_k |lambda|.
    """
    s = np.asarray(sorted((float(x) for x in sigmas), reverse=True))
    l = np.asarray(sorted((abs(complex(z)) for z in lambdas), reverse=True))
    if s.size != l.size or s.size == 0:
        return False
    if np.any(s < 0.0):
        return False
    ps, pl = 1.0, 1.0
    for k in range(s.size):
        ps *= s[k]
        pl *= l[k]
        if k < s.size - 1:
            if ps < pl - cfg.abs_tol * 100:
                return False
    return abs(ps - pl) <= cfg.abs_tol * 100
