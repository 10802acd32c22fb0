"""Similarity: Jordan data, the similar-to-a-partial-isometry test, realization.

A square matrix is similar to a partial isometry exactly when its spectrum
sits in the closed unit disk, every unimodular eigenvalue is semisimple, and
no eigenvalue strictly inside the disk has more Jordan blocks than zero does.
The realization glues upper-triangular chains built by
:func:`pimatrix.synth.synth_superdiagonal` onto a diagonal unitary part.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CFG, ToleranceCfg, as_matrix, eigenvalues, numeric_rank
from .errors import IllConditioned, NotRealizable
from .synth import synth_superdiagonal

__all__ = ["JordanData", "jordan_of", "similar_to_pi", "realize_similar_pi"]


@dataclass(frozen=True)
class JordanData:
    """Jordan structure: eigenvalue -> descending block sizes.

    Stored as a tuple of (eigenvalue, sizes) pairs with distinct eigenvalues;
    the pairs are kept sorted (descending modulus, then lexicographic) so two
    structurally equal datasets compare equal.
    """

    blocks: tuple[tuple[complex, tuple[int, ...]], ...]

    def __init__(self, blocks) -> None:
        if isinstance(blocks, dict):
            items = blocks.items()
        else:
            items = list(blocks)
        norm = []
        for lam, sizes in items:
            sizes = tuple(sorted((int(s) for s in sizes), reverse=True))
            if not sizes or any(s < 1 for s in sizes):
                raise ValueError("block sizes must be positive")
            norm.append((complex(lam), sizes))
        if not norm:
            raise ValueError("need at least one Jordan block")
        norm.sort(key=lambda p: (-abs(p[0]), p[0].real, p[0].imag))
        eigs = [lam for lam, _ in norm]
        for i in range(len(eigs) - 1):
            if eigs[i] == eigs[i + 1]:
                raise ValueError("eigenvalues must be distinct")
        object.__setattr__(self, "blocks", tuple(norm))

    @property
    def n(self) -> int:
        return sum(sum(sizes) for _, sizes in self.blocks)

    def eigs(self) -> tuple[complex, ...]:
        return tuple(lam for lam, _ in self.blocks)

    def sizes_of(self, lam: complex, tol: float = 0.0) -> tuple[int, ...]:
        for mu, sizes in self.blocks:
            if abs(mu - lam) <= tol:
                return sizes
        return ()

    def matrix(self) -> np.ndarray:
        """The Jordan canonical matrix itself (blocks in stored order)."""
        out = np.zeros((self.n, self.n), dtype=complex)
        at = 0
        for lam, sizes in self.blocks:
            for s in sizes:
                for i in range(s):
                    out[at + i, at + i] = lam
                    if i + 1 < s:
                        out[at + i, at + i + 1] = 1.0
                at += s
        return out

    def equivalent(self, other: "JordanData", tol: float) -> bool:
        """Structural equality with eigenvalues matched within ``tol``."""
        if self.n != other.n or len(self.blocks) != len(other.blocks):
            return False
        used = [False] * len(other.blocks)
        for lam, sizes in self.blocks:
            hit = None
            best = tol
            for j, (mu, osizes) in enumerate(other.blocks):
                if not used[j] and sizes == osizes and abs(mu - lam) <= best:
                    hit, best = j, abs(mu - lam)
            if hit is None:
                return False
            used[hit] = True
        return True


def _cluster(eigs: np.ndarray, gap: float) -> list[list[int]]:
    """Single-linkage clustering of complex values with link distance ``gap``."""
    order = sorted(range(len(eigs)), key=lambda i: (eigs[i].real, eigs[i].imag))
    groups: list[list[int]] = []
    for i in order:
        placed = False
        for g in groups:
            if any(abs(eigs[i] - eigs[j]) <= gap for j in g):
                g.append(i)
                placed = True
                break
        if placed:
            # merging may chain clusters together; rebuild greedily
            merged = True
            while merged:
                merged = False
                for x in range(len(groups)):
                    for y in range(x + 1, len(groups)):
                        if any(abs(eigs[i] - eigs[j]) <= gap for i in groups[x] for j in groups[y]):
                            groups[x].extend(groups.pop(y))
                            merged = True
                            break
                    if merged:
                        break
        else:
            groups.append([i])
    return groups


def jordan_of(a, cfg: ToleranceCfg = DEFAULT_CFG) -> JordanData:
    """Jordan structure via the rank staircase of powers of (A - lambda I).

    Needs decently separated eigenvalue clusters; raises IllConditioned when
    the clustering or the staircase is ambiguous.
    """
    a = as_matrix(a)
    n = a.shape[0]
    eigs = eigenvalues(a)
    gap = 10 * cfg.abs_tol
    groups = _cluster(eigs, gap)
    reps = [complex(np.mean([eigs[i] for i in g])) for g in groups]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            if abs(reps[i] - reps[j]) <= 3 * gap:
                raise IllConditioned(
                    f"eigenvalue clusters {reps[i]:.3g} and {reps[j]:.3g} are too close to separate"
                )
    blocks: dict[complex, tuple[int, ...]] = {}
    eye = np.eye(n, dtype=complex)
    for rep, g in zip(reps, groups):
        mult = len(g)
        shifted = a - rep * eye
        nullities = [0]
        power = eye
        for _ in range(1, mult + 1):
            power = power @ shifted
            nullities.append(n - numeric_rank(power, cfg))
            if nullities[-1] == mult:
                break
        if nullities[-1] != mult or any(
            nullities[k + 1] < nullities[k] for k in range(len(nullities) - 1)
        ):
            raise IllConditioned(f"rank staircase at eigenvalue {rep:.6g} is inconsistent")
        # blocks of size >= k: nullities[k] - nullities[k-1]
        geq = [nullities[k + 1] - nullities[k] for k in range(len(nullities) - 1)]
        sizes = []
        for k, count in enumerate(geq):
            exact = count - (geq[k + 1] if k + 1 < len(geq) else 0)
            sizes.extend([k + 1] * exact)
        if sum(sizes) != mult:
            raise IllConditioned(f"block sizes at eigenvalue {rep:.6g} do not add up")
        blocks[rep] = tuple(sorted(sizes, reverse=True))
    return JordanData(blocks)


def similar_to_pi(j: JordanData, cfg: ToleranceCfg = DEFAULT_CFG) -> bool:
    """Decide whether any matrix with this Jordan data is similar to a PI."""
    zero_blocks = 0
    disk: list[tuple[complex, int]] = []
    for lam, sizes in j.blocks:
        if abs(lam) > 1.0 + cfg.unimodular_tol:
            return False
        if abs(abs(lam) - 1.0) <= cfg.unimodular_tol:
            if any(s > 1 for s in sizes):
                return False
            continue
        if abs(lam) <= cfg.abs_tol:
            zero_blocks = len(sizes)
        else:
            disk.append((lam, len(sizes)))
    for _, count in disk:
        if count > zero_blocks:
            return False
    return True


def realize_similar_pi(j: JordanData, cfg: ToleranceCfg = DEFAULT_CFG) -> np.ndarray:
    """Construct an upper-triangular partial isometry with Jordan data ``j``.

    Nonzero disk blocks are dealt round-robin into one group per zero block;
    each group becomes a superdiagonal chain whose diagonal runs are the
    group's eigenvalues. Unimodular eigenvalues form a trailing diagonal
    unitary summand.
    """
    if not similar_to_pi(j, cfg):
        raise NotRealizable("Jordan data admits no partial isometry")
    circle: list[complex] = []
    zero_sizes: tuple[int, ...] = ()
    disk: list[tuple[complex, tuple[int, ...]]] = []
    for lam, sizes in j.blocks:
        if abs(abs(lam) - 1.0) <= cfg.unimodular_tol:
            circle.extend([lam] * len(sizes))
        elif abs(lam) <= cfg.abs_tol:
            zero_sizes = sizes
        else:
            disk.append((lam, sizes))
    summands: list[np.ndarray] = []
    if zero_sizes:
        groups: list[list[tuple[complex, int]]] = [[(0.0 + 0.0j, s)] for s in zero_sizes]
        cursor = 0
        for lam, sizes in sorted(disk, key=lambda p: (-abs(p[0]), p[0].real, p[0].imag)):
            for s in sizes:
                groups[cursor % len(groups)].append((lam, s))
                cursor += 1
        for g in groups:
            xis: list[complex] = []
            for lam, s in g:
                xis.extend([lam] * s)
            summands.append(synth_superdiagonal(xis[1:], cfg))
    if circle:
        circle.sort(key=lambda z: (np.angle(z) % (2 * np.pi), z.real))
        summands.append(np.diag(np.asarray(circle, dtype=complex)))
    n = j.n
    out = np.zeros((n, n), dtype=complex)
    at = 0
    for s in summands:
        k = s.shape[0]
        out[at : at + k, at : at + k] = s
        at += k
    return out
