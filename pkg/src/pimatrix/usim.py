"""Unitary similarity: trace words, small-size complete invariants, dilations.

Words are strings over {x, y} read left to right with x = A and y = A*.
Trace signatures over suitable word families decide unitary similarity
completely for n <= 4 (Murnaghan / Sibirskii / Djokovic families); for
larger sizes the comparison is exhaustive up to a degree cap and therefore
one-sided: unequal signatures refute similarity, equal ones do not prove it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as _iproduct

import numpy as np

from .core import DEFAULT_CFG, ToleranceCfg, approx_eq, as_matrix, char_poly, eigenvalues, herm_sqrt, svd
from .errors import (
    DefectNotOne,
    NotContraction,
    NotPartialIsometry,
    ShapeMismatch,
    SpectralGapTooSmall,
    UnsupportedSize,
)
from .predicates import defect, is_partial_isometry

__all__ = [
    "Word",
    "TraceSignature",
    "UsimVerdict",
    "MURNAGHAN_WORDS",
    "SIBIRSKII_WORDS",
    "DJOKOVIC_WORDS",
    "PI_WORDS_N4",
    "trace_signature",
    "unitarily_similar",
    "pi_usim_small",
    "defect_one_usim",
    "transpose_probe",
    "dilate",
    "cnu_split",
]


@dataclass(frozen=True)
class Word:
    """A word in the letters x (the matrix) and y (its adjoint)."""

    letters: str

    def __post_init__(self) -> None:
        if not self.letters or any(c not in "xy" for c in self.letters):
            raise ValueError(f"word must be a nonempty string over x/y, got {self.letters!r}")

    @property
    def degree(self) -> int:
        return len(self.letters)

    def evaluate(self, a: np.ndarray) -> np.ndarray:
        y = a.conj().T
        out = np.eye(a.shape[0], dtype=complex)
        for c in self.letters:
            out = out @ (a if c == "x" else y)
        return out

    def trace(self, a: np.ndarray) -> complex:
        return complex(np.trace(self.evaluate(a)))

    def __str__(self) -> str:
        # compress runs: xxxyy -> x^3y^2
        out = []
        i = 0
        while i < len(self.letters):
            j = i
            while j < len(self.letters) and self.letters[j] == self.letters[i]:
                j += 1
            run = j - i
            out.append(self.letters[i] if run == 1 else f"{self.letters[i]}^{run}")
            i = j
        return "".join(out)


def _w(s: str) -> Word:
    return Word(s)


# Complete families of trace words for deciding unitary similarity at small n.
MURNAGHAN_WORDS = (_w("x"), _w("xx"), _w("yx"))
SIBIRSKII_WORDS = (
    _w("x"),
    _w("xx"),
    _w("xxx"),
    _w("yx"),
    _w("yxx"),
    _w("yyxx"),
    _w("yxxyyx"),
)
DJOKOVIC_WORDS = (
    _w("x"),
    _w("xx"),
    _w("xy"),
    _w("xxx"),
    _w("xxy"),
    _w("xxxx"),
    _w("xxxy"),
    _w("xxyy"),
    _w("xyxy"),
    _w("xxxyy"),
    _w("xxyxxy"),
    _w("xxyyxy"),
    _w("yyxxyx"),
    _w("xxxyyxy"),
    _w("xxxyyxxy"),
    _w("xxxyyyxy"),
    _w("yyyxxxyx"),
    _w("xxxyxxyxy"),
    _w("xxyyxyxxy"),
    _w("xxxyyyxxyy"),
)
# Words that, on top of the characteristic polynomial and the rank, pin down
# a 4x4 partial isometry up to unitary similarity.
PI_WORDS_N4 = (
    _w("xxyy"),
    _w("xxxyy"),
    _w("xxxxyy"),
    _w("xxxyyy"),
    _w("xxxxy"),
    _w("xxxyyyxxyy"),
)


@dataclass(frozen=True)
class TraceSignature:
    """Trace values of a word family, in family order."""

    words: tuple[Word, ...]
    values: tuple[complex, ...]

    def distance(self, other: "TraceSignature") -> float:
        if self.words != other.words:
            return float("inf")
        return max(
            (abs(u - v) for u, v in zip(self.values, other.values)),
            default=0.0,
        )

    def first_difference(self, other: "TraceSignature", tol: float) -> Word | None:
        """First word (by family order) whose traces differ by more than tol."""
        for w, u, v in zip(self.words, self.values, other.values):
            if abs(u - v) > tol * max(1.0, abs(u), abs(v)):
                return w
        return None


def trace_signature(a, words) -> TraceSignature:
    a = as_matrix(a)
    ws = tuple(words)
    return TraceSignature(words=ws, values=tuple(w.trace(a) for w in ws))


@dataclass(frozen=True)
class UsimVerdict:
    """Outcome of a unitary-similarity comparison.

    kind is "yes", "no" or "up_to_degree"; the last one means every compared
    trace agreed but the family was only exhaustive up to ``degree``.
    """

    kind: str
    degree: int | None = None
    witness: Word | None = None

    @classmethod
    def yes(cls) -> "UsimVerdict":
        return cls("yes")

    @classmethod
    def no(cls, witness: Word | None = None) -> "UsimVerdict":
        return cls("no", witness=witness)

    @classmethod
    def up_to_degree(cls, d: int) -> "UsimVerdict":
        return cls("up_to_degree", degree=d)

    @property
    def definite(self) -> bool:
        return self.kind in ("yes", "no")


def _all_words_up_to(degree: int):
    for d in range(1, degree + 1):
        for tup in _iproduct("xy", repeat=d):
            yield Word("".join(tup))


def _family_for(n: int) -> tuple[Word, ...]:
    if n == 1:
        return (_w("x"),)
    if n == 2:
        return MURNAGHAN_WORDS
    if n == 3:
        return SIBIRSKII_WORDS
    return DJOKOVIC_WORDS


def unitarily_similar(a, b, cfg: ToleranceCfg = DEFAULT_CFG, degree_cap: int = 8) -> UsimVerdict:
    """Compare two matrices of one size for unitary similarity.

    n <= 4 uses a complete trace-word family, so the answer is definite.
    n >= 5 compares all words up to ``degree_cap`` plus the Djokovic family;
    any disagreement is a definite no, full agreement is only "up to degree".
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"sizes differ: {a.shape} vs {b.shape}")
    n = a.shape[0]
    tol = cfg.abs_tol * 100
    if n <= 4:
        fam = _family_for(n)
        sa = trace_signature(a, fam)
        sb = trace_signature(b, fam)
        bad = sa.first_difference(sb, tol)
        return UsimVerdict.no(bad) if bad is not None else UsimVerdict.yes()
    words = list(_all_words_up_to(degree_cap))
    words += [w for w in DJOKOVIC_WORDS if w.degree > degree_cap]
    sa = trace_signature(a, words)
    sb = trace_signature(b, words)
    bad = sa.first_difference(sb, tol)
    if bad is not None:
        return UsimVerdict.no(bad)
    return UsimVerdict.up_to_degree(degree_cap)


def pi_usim_small(a, b, cfg: ToleranceCfg = DEFAULT_CFG) -> bool:
    """Unitary similarity of partial isometries of size 2, 3 or 4.

    For partial isometries the full word families collapse: size 2 needs the
    characteristic polynomial and the rank; size 3 additionally the trace of
    the product of the two projections; size 4 the six PI_WORDS_N4 traces.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"sizes differ: {a.shape} vs {b.shape}")
    n = a.shape[0]
    if n not in (2, 3, 4):
        raise UnsupportedSize(f"pi_usim_small covers sizes 2-4, got {n}")
    if not is_partial_isometry(a, cfg) or not is_partial_isometry(b, cfg):
        raise NotPartialIsometry("both inputs must be partial isometries")
    tol = cfg.abs_tol * 100
    if char_poly(a).distance(char_poly(b)) > tol:
        return False
    ra = int(round(float(np.sum(np.linalg.svd(a, compute_uv=False) > 0.5))))
    rb = int(round(float(np.sum(np.linalg.svd(b, compute_uv=False) > 0.5))))
    if ra != rb:
        return False
    if n == 2:
        return True
    if n == 3:
        w = _w("xyyx")  # trace of (A A*)(A* A)
        return abs(w.trace(a) - w.trace(b)) <= tol * max(1.0, abs(w.trace(a)))
    sa = trace_signature(a, PI_WORDS_N4)
    sb = trace_signature(b, PI_WORDS_N4)
    return sa.first_difference(sb, tol) is None


def defect_one_usim(a, b, cfg: ToleranceCfg = DEFAULT_CFG) -> bool:
    """Unitary similarity of defect-one partial isometries of equal size.

    With a one-dimensional kernel the characteristic polynomial is a complete
    unitary invariant.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ShapeMismatch(f"sizes differ: {a.shape} vs {b.shape}")
    if not is_partial_isometry(a, cfg) or not is_partial_isometry(b, cfg):
        raise NotPartialIsometry("both inputs must be partial isometries")
    if defect(a, cfg) != 1 or defect(b, cfg) != 1:
        raise DefectNotOne("both inputs must have a one-dimensional kernel")
    return char_poly(a).distance(char_poly(b)) <= cfg.abs_tol * 100


def transpose_probe(a, cfg: ToleranceCfg = DEFAULT_CFG, degree_cap: int = 8) -> UsimVerdict:
    """Compare a partial isometry with its transpose.

    Definite yes for sizes up to 4; from size 5 on the verdict may be an
    honest refutation or only agreement up to the compared degree.
    """
    a = as_matrix(a)
    if not is_partial_isometry(a, cfg):
        raise NotPartialIsometry("transpose probe is for partial isometries")
    return unitarily_similar(a, a.T, cfg, degree_cap=degree_cap)


def dilate(a, cfg: ToleranceCfg = DEFAULT_CFG) -> np.ndarray:
    """Partial-isometry dilation [[A, (I-AA*)^(1/2)], [0, 0]] of a contraction.

    The result is a 2n x 2n partial isometry whose top-left block is A; two
    contractions are unitarily similar iff their dilations are.
    """
    a = as_matrix(a)
    n = a.shape[0]
    _, s, _ = svd(a)
    if s.size and s[0] > 1.0 + 100 * cfg.abs_tol:
        raise NotContraction(f"operator norm {s[0]:.6g} exceeds 1")
    gap = herm_sqrt(np.eye(n, dtype=complex) - a @ a.conj().T)
    out = np.zeros((2 * n, 2 * n), dtype=complex)
    out[:n, :n] = a
    out[:n, n:] = gap
    return out


def cnu_split(a, cfg: ToleranceCfg = DEFAULT_CFG) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Split a partial isometry as Q (T + U) Q* with T cnu and U diagonal unitary.

    Returns (Q, T, U): Q unitary, T an upper-triangular completely non-unitary
    partial isometry holding the disk spectrum, U the unimodular eigenvalues
    sorted by argument. T occupies the leading block, so
    Q* @ A @ Q == [[T, 0], [0, U]] up to tolerance.
    """
    import scipy.linalg as sla

    a = as_matrix(a)
    if not is_partial_isometry(a, cfg):
        raise NotPartialIsometry("cnu split needs a partial isometry")
    n = a.shape[0]
    delta = cfg.unimodular_tol
    eigs = eigenvalues(a)
    margins = np.abs(np.abs(eigs) - (1.0 - delta))
    if np.any(margins < delta / 10):
        raise SpectralGapTooSmall("an eigenvalue sits on the disk/circle threshold")
    t, q, sdim = sla.schur(a, output="complex", sort=lambda z: bool(abs(z) < 1.0 - delta))
    k = int(sdim)
    cross = t[:k, k:]
    tail = t[k:, k:]
    off = tail - np.diag(np.diag(tail))
    scale = max(1.0, float(np.linalg.norm(a)))
    if (cross.size and np.max(np.abs(cross)) > 1e3 * cfg.abs_tol * scale) or (
        off.size and np.max(np.abs(off)) > 1e3 * cfg.abs_tol * scale
    ):
        raise SpectralGapTooSmall("unitary part did not decouple cleanly")
    # canonicalize the unitary block: ascending argument in [0, 2pi)
    diag = np.diag(tail).copy()
    order = sorted(range(diag.size), key=lambda i: (np.angle(diag[i]) % (2 * np.pi), diag[i].real))
    perm = np.zeros((diag.size, diag.size), dtype=complex)
    for col, row in enumerate(order):
        perm[row, col] = 1.0
    qq = q.copy()
    qq[:, k:] = qq[:, k:] @ perm
    tblock = t[:k, :k].copy()
    ublock = np.diag(diag[order])
    return qq, tblock, ublock
