import numpy as np
import pytest

from pimatrix.core import DEFAULT_CFG, numeric_rank
from pimatrix.errors import NotPartialIsometry
from pimatrix.predicates import classify, defect, is_partial_isometry, projections

from helpers import (
    A2,
    ABHML_A,
    B2,
    C3,
    CNU4,
    HALFWAY,
    NINTH,
    R2PI,
    UET5,
    random_contraction,
    random_pi,
    random_unitary,
)


@pytest.mark.parametrize("a", [A2, B2, C3, R2PI, NINTH, CNU4, UET5, np.eye(4)])
def test_known_partial_isometries(a):
    assert is_partial_isometry(a)


@pytest.mark.parametrize(
    "a",
    [
        HALFWAY,
        np.diag([0.5, 0.0]).astype(complex),
        2 * np.eye(2),
        np.array([[1.0, 1.0], [0.0, 1.0]]),
    ],
)
def test_known_non_examples(a):
    assert not is_partial_isometry(a)


def test_zero_matrix_is_partial_isometry():
    assert is_partial_isometry(np.zeros((3, 3)))


def test_projections_golden_values():
    init_a, fin_a = projections(A2)
    s3 = np.sqrt(3.0)
    assert np.allclose(init_a, np.array([[0.75, s3 / 4], [s3 / 4, 0.25]]), atol=1e-12)
    assert np.allclose(fin_a, np.diag([0.0, 1.0]), atol=1e-12)

    init_b, fin_b = projections(B2)
    assert np.allclose(init_b, np.diag([0.0, 1.0]), atol=1e-12)
    assert np.allclose(fin_b, np.diag([1.0, 0.0]), atol=1e-12)

    init_c, fin_c = projections(C3)
    want_fin = np.array([[5.0, 2.0, -4.0], [2.0, 8.0, 2.0], [-4.0, 2.0, 5.0]]) / 9.0
    assert np.allclose(init_c, np.diag([1.0, 1.0, 0.0]), atol=1e-12)
    assert np.allclose(fin_c, want_fin, atol=1e-12)


def test_projections_are_idempotent_hermitian(rng):
    a = random_pi(rng, 6)
    p, q = projections(a)
    for proj in (p, q):
        assert np.allclose(proj, proj.conj().T, atol=1e-10)
        assert np.allclose(proj @ proj, proj, atol=1e-10)
    # the two projections have equal rank
    assert numeric_rank(p) == numeric_rank(q)


def test_projections_rejects_non_pi():
    with pytest.raises(NotPartialIsometry):
        projections(HALFWAY)


@pytest.mark.parametrize(
    "a,d",
    [(B2, 1), (np.zeros((2, 2)), 2), (ABHML_A, 2), (UET5, 2), (np.eye(3), 0)],
)
def test_defect_values(a, d):
    assert defect(a) == d


def test_classify_cnu_example():
    info = classify(A2)
    assert info.is_pi
    assert info.rank == 1
    assert info.defect == 1
    assert info.is_cnu
    assert not info.is_unitary
    assert info.n == 2
    roots = sorted(abs(z) for z in info.disk_spectrum)
    assert np.allclose(roots, [0.0, 0.5], atol=1e-10)
    assert info.circle_spectrum == ()


def test_classify_unitary_and_mixed():
    info_u = classify(np.diag([1.0, -1.0]).astype(complex))
    assert info_u.is_unitary and not info_u.is_cnu
    assert len(info_u.circle_spectrum) == 2

    info_m = classify(CNU4)
    assert info_m.is_pi and not info_m.is_unitary and not info_m.is_cnu
    assert len(info_m.circle_spectrum) == 2
    assert len(info_m.disk_spectrum) == 2


def test_classify_non_pi():
    info = classify(np.diag([0.5, 0.0]))
    assert not info.is_pi


def test_classify_char_poly_roots():
    info = classify(A2)
    r = info.char.roots()
    assert sorted(abs(z) for z in r) == pytest.approx([0.0, 0.5], abs=1e-10)


# --- property-style checks -------------------------------------------------


def test_pi_iff_adjoint_pi(rng):
    for _ in range(40):
        n = int(rng.integers(1, 9))
        a = random_pi(rng, n) if rng.random() < 0.5 else random_contraction(rng, n, 0.8)
        assert is_partial_isometry(a) == is_partial_isometry(a.conj().T)


def test_pi_stable_under_unitary_sandwich(rng):
    for _ in range(25):
        n = int(rng.integers(2, 9))
        a = random_pi(rng, n)
        u = random_unitary(rng, n)
        v = random_unitary(rng, n)
        assert is_partial_isometry(u @ a @ v)


def test_nonzero_pi_has_unit_norm(rng):
    for _ in range(25):
        n = int(rng.integers(2, 9))
        a = random_pi(rng, n, r=int(rng.integers(1, n + 1)))
        s = np.linalg.svd(a, compute_uv=False)
        assert abs(s[0] - 1.0) <= 100 * DEFAULT_CFG.abs_tol


def test_isometric_on_initial_space(rng):
    for _ in range(25):
        n = int(rng.integers(2, 9))
        a = random_pi(rng, n, r=int(rng.integers(1, n + 1)))
        p = a.conj().T @ a
        x = p @ (rng.normal(size=n) + 1j * rng.normal(size=n))
        if np.linalg.norm(x) < 1e-8:
            continue
        x = x / np.linalg.norm(x)
        assert abs(np.linalg.norm(a @ x) - 1.0) <= 1e-8


def test_initial_projection_rank_equals_rank(rng):
    for _ in range(20):
        n = int(rng.integers(1, 9))
        a = random_pi(rng, n)
        assert numeric_rank(a.conj().T @ a) == numeric_rank(a)


def test_normal_pi_spectrum_splits(rng):
    # normal partial isometries: every eigenvalue is 0 or unimodular
    for _ in range(15):
        n = int(rng.integers(2, 7))
        u = random_unitary(rng, n)
        k = int(rng.integers(0, n + 1))
        d = np.zeros(n, dtype=complex)
        d[:k] = np.exp(2j * np.pi * rng.random(k))
        a = u @ np.diag(d) @ u.conj().T
        info = classify(a)
        assert info.is_pi
        for lam in info.disk_spectrum:
            assert abs(lam) <= 1e-8
        for lam in info.circle_spectrum:
            assert abs(abs(lam) - 1.0) <= 1e-8


def test_zero_in_spectrum_iff_not_unitary(rng):
    for _ in range(20):
        n = int(rng.integers(1, 8))
        a = random_pi(rng, n)
        info = classify(a)
        eigs = list(info.disk_spectrum) + list(info.circle_spectrum)
        has_zero = min(abs(z) for z in eigs) <= 1e-8
        assert has_zero == (not info.is_unitary)
