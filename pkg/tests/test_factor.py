import numpy as np
import pytest

from pimatrix.core import DEFAULT_CFG, approx_eq, numeric_rank
from pimatrix.errors import NotPartialIsometry
from pimatrix.factor import (
    block_form,
    compress_to_N,
    is_pi_via_pseudoinverse,
    pi_polar,
    polar_factor,
    pseudoinverse,
    svd_canonical,
    unitary_extension,
)
from pimatrix.predicates import is_partial_isometry

from helpers import A2, B2, C3, HALFWAY, NINTH, R2PI, random_contraction, random_pi

TOL = 10 * DEFAULT_CFG.abs_tol


def test_svd_canonical_golden():
    fac = svd_canonical(R2PI)
    assert fac.rank == 2
    assert np.linalg.norm(fac.reconstruct() - R2PI) <= TOL * 3
    # factors unitary
    assert approx_eq(fac.u @ fac.u.conj().T, np.eye(3))
    assert approx_eq(fac.v @ fac.v.conj().T, np.eye(3))


def test_svd_canonical_identity_and_zero():
    assert svd_canonical(np.eye(4)).rank == 4
    assert svd_canonical(np.zeros((3, 3))).rank == 0


def test_svd_canonical_rejects_non_pi():
    with pytest.raises(NotPartialIsometry):
        svd_canonical(HALFWAY)


@pytest.mark.parametrize("seed", range(6))
def test_svd_canonical_random_round_trip(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 13))
    r = int(rng.integers(0, n + 1))
    a = random_pi(rng, n, r)
    fac = svd_canonical(a)
    assert fac.rank == r
    assert np.linalg.norm(fac.reconstruct() - a) <= TOL * n


def test_compress_to_n_structure():
    q, nblk = compress_to_N(NINTH)
    r = 2
    assert nblk.shape == (3, r)
    # compression is [N | 0]
    comp = q.conj().T @ NINTH @ q
    assert np.allclose(comp[:, :r], nblk, atol=1e-10)
    assert np.allclose(comp[:, r:], 0.0, atol=1e-10)
    # columns of N orthonormal
    assert approx_eq(nblk.conj().T @ nblk, np.eye(r))


def test_block_form_golden_identity():
    _, nblk = compress_to_N(NINTH)
    b, c = block_form(NINTH)
    r = 2
    assert b.shape == (r, r) and c.shape == (1, r)
    assert np.allclose(np.vstack([b, c]), nblk, atol=1e-12)
    # the defining identity for the split
    assert np.linalg.norm(b.conj().T @ b + c.conj().T @ c - np.eye(r)) <= 1e-9


def test_block_form_unitary_has_empty_tail():
    b, c = block_form(np.eye(3))
    assert b.shape == (3, 3)
    assert c.shape == (0, 3)


@pytest.mark.parametrize("seed", range(5))
def test_block_form_random(seed):
    rng = np.random.default_rng(100 + seed)
    n = int(rng.integers(2, 10))
    r = int(rng.integers(1, n + 1))
    a = random_pi(rng, n, r)
    b, c = block_form(a)
    assert np.linalg.norm(b.conj().T @ b + c.conj().T @ c - np.eye(r)) <= TOL * n


def test_polar_factor_golden():
    w, p, q = polar_factor(R2PI)
    assert np.linalg.norm(w @ p - R2PI) <= 1e-9
    assert np.linalg.norm(q @ w - R2PI) <= 1e-9
    # p and q are the initial/final projections of the input
    assert np.allclose(p, np.diag([1.0, 1.0, 0.0]), atol=1e-10)
    s3 = np.sqrt(3.0)
    want_q = np.array(
        [[1.0, 0.0, 0.0], [0.0, 0.75, s3 / 4], [0.0, s3 / 4, 0.25]]
    )
    assert np.allclose(q, want_q, atol=1e-10)
    assert approx_eq(w @ w.conj().T, np.eye(3))


@pytest.mark.parametrize("seed", range(5))
def test_polar_factor_random(seed):
    rng = np.random.default_rng(200 + seed)
    n = int(rng.integers(1, 13))
    a = random_pi(rng, n)
    w, p, q = polar_factor(a)
    assert np.linalg.norm(w @ p - a) <= TOL * n
    assert np.linalg.norm(q @ w - a) <= TOL * n
    assert approx_eq(p, a.conj().T @ a)
    assert approx_eq(q, a @ a.conj().T)


def test_unitary_extension_agrees_on_initial_space(rng):
    for _ in range(10):
        n = int(rng.integers(1, 10))
        a = random_pi(rng, n)
        w = unitary_extension(a)
        assert approx_eq(w @ w.conj().T, np.eye(n))
        assert np.linalg.norm((w - a) @ (a.conj().T @ a)) <= TOL * n


def test_unitary_extension_of_unitary_is_itself(rng):
    from helpers import random_unitary

    u = random_unitary(rng, 5)
    assert approx_eq(unitary_extension(u), u)


def test_pi_polar_on_pi_returns_input():
    e, r = pi_polar(A2)
    assert np.allclose(e, A2, atol=1e-10)
    assert np.allclose(r, A2.conj().T @ A2, atol=1e-8)


def test_pi_polar_general_matrix():
    a = np.diag([2.0, 0.0]).astype(complex)
    e, r = pi_polar(a)
    assert np.allclose(e, np.diag([1.0, 0.0]), atol=1e-12)
    assert np.allclose(r, np.diag([2.0, 0.0]), atol=1e-12)


@pytest.mark.parametrize("seed", range(6))
def test_pi_polar_random(seed):
    rng = np.random.default_rng(300 + seed)
    n = int(rng.integers(1, 13))
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    if seed % 2:
        a[:, : n // 2] = 0.0  # exercise rank deficiency
    e, r = pi_polar(a)
    assert is_partial_isometry(e)
    assert np.linalg.norm(e @ r - a) <= TOL * n * max(1.0, np.linalg.norm(a))
    assert numeric_rank(e) == numeric_rank(a)
    assert numeric_rank(r) == numeric_rank(a)
    # r is the positive factor |a|, e agrees with a * pinv(|a|)
    assert np.allclose(r, r.conj().T, atol=1e-9)
    assert np.allclose(e, a @ pseudoinverse(r), atol=1e-7)


def test_pseudoinverse_known():
    assert np.allclose(pseudoinverse(B2), B2.conj().T, atol=1e-12)
    assert np.allclose(
        pseudoinverse(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]), atol=1e-12
    )
    a = np.array([[1.0, 2.0], [3.0, 4.0]])
    assert np.allclose(pseudoinverse(a), np.linalg.inv(a), atol=1e-10)


@pytest.mark.parametrize("seed", range(8))
def test_pseudoinverse_penrose_identities(seed):
    rng = np.random.default_rng(400 + seed)
    n = int(rng.integers(1, 13))
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    if seed % 3 == 0:
        a[:, 0] = a[:, -1]  # make it singular sometimes
    ap = pseudoinverse(a)
    nn = np.linalg.norm(a)
    assert np.linalg.norm(a @ ap @ a - a) <= 1e-8 * max(1.0, nn)
    assert np.linalg.norm(ap @ a @ ap - ap) <= 1e-8 * max(1.0, np.linalg.norm(ap))
    assert np.linalg.norm((a @ ap).conj().T - a @ ap) <= 1e-8
    assert np.linalg.norm((ap @ a).conj().T - ap @ a) <= 1e-8


def test_pseudoinverse_route_agrees_with_sv_route(rng):
    # the adjoint-equals-pseudoinverse test and the singular value test
    # must give identical verdicts
    for _ in range(60):
        n = int(rng.integers(1, 7))
        if rng.random() < 0.5:
            a = random_pi(rng, n)
        else:
            a = random_contraction(rng, n, float(rng.uniform(0.3, 1.0)))
        assert is_pi_via_pseudoinverse(a) == is_partial_isometry(a)


def test_is_pi_via_pseudoinverse_known():
    assert is_pi_via_pseudoinverse(C3)
    assert not is_pi_via_pseudoinverse(HALFWAY)
