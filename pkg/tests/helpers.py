"""Shared fixtures data: worked matrices and random generators used across the suite."""

import numpy as np

S3 = np.sqrt(3.0)
R2 = np.sqrt(2.0)

# --- small worked partial isometries -------------------------------------

# 2x2 rank-one partial isometry with singular values (1, 0)
A2 = np.array([[0.0, 0.0], [S3 / 2, 0.5]], dtype=complex)

# the nilpotent shift
B2 = np.array([[0.0, 1.0], [0.0, 0.0]], dtype=complex)

# 3x3 real partial isometry of rank 2 with non-diagonal final projection
C3 = np.array([[2.0, -1.0, 0.0], [2.0, 2.0, 0.0], [-1.0, 2.0, 0.0]], dtype=complex) / 3.0

# rank-2 partial isometry used for the canonical-factorization examples
R2PI = np.array(
    [[1.0, 0.0, 0.0], [0.0, S3 / 2, 0.0], [0.0, 0.5, 0.0]], dtype=complex
)

# rank-2 partial isometry whose compression has a genuinely rectangular block split
NINTH = np.array(
    [[8.0, 2.0, 2.0], [2.0, 5.0, -4.0], [-2.0, 4.0, -5.0]], dtype=complex
) / 9.0

# product pair: initial projection of PROD_A commutes with final of PROD_B
PROD_A = np.array(
    [[1.0, 0.0, 0.0], [0.0, 0.5, 0.0], [0.0, S3 / 2, 0.0]], dtype=complex
)
PROD_B = np.array(
    [[0.0, 0.0, 0.0], [2.0, 2.0, 1.0], [1.0, -2.0, 2.0]], dtype=complex
) / 3.0
PROD_AB = np.array(
    [
        [0.0, 0.0, 0.0],
        [1.0 / 3.0, 1.0 / 3.0, 1.0 / 6.0],
        [1.0 / S3, 1.0 / S3, 1.0 / (2 * S3)],
    ],
    dtype=complex,
)

# rank-one partial isometry whose product with B2 fails to be one
CEX_B = np.array([[0.0, 1.0 / R2], [0.0, 1.0 / R2]], dtype=complex)

# B2 @ CEX_B: a contraction that is not a partial isometry (top singular value 1/sqrt(2))
HALFWAY = np.array([[0.0, 1.0 / R2], [0.0, 0.0]], dtype=complex)

# 4x4 partial isometry splitting into a nilpotent-ish block plus diag(-1, 1)
CNU4 = np.array(
    [
        [0.0, S3 / 2, 0.0, 0.0],
        [0.0, 0.5, 0.0, 0.0],
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ],
    dtype=complex,
)

# defect-2 nilpotent pair with equal char polys but different Jordan structure
ABHML_A = np.zeros((4, 4), dtype=complex)
ABHML_A[0, 1] = 1.0
ABHML_A[1, 2] = 1.0

ABHML_B = np.zeros((4, 4), dtype=complex)
ABHML_B[0, 1] = 1.0
ABHML_B[2, 3] = 1.0

# 5x5 defect-2 partial isometry not unitarily similar to its transpose;
# the separating trace word has degree 10.
UET5 = np.array(
    [
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.5, 0.0, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, S3 / 2, 0.0, 0.0],
    ],
    dtype=complex,
)

# --- characteristic-function worked examples ------------------------------

# defect-one 3x3 with scalar characteristic function -z*((z-1/r2)/(1-z/r2))^2
LIV3_A = np.array(
    [
        [0.0, -1.0 / R2, 0.5],
        [0.0, 1.0 / R2, 0.5],
        [0.0, 0.0, 1.0 / R2],
    ],
    dtype=complex,
)
LIV3_U = np.array(
    [
        [-0.5, -1.0 / R2, 0.5],
        [-0.5, 1.0 / R2, 0.5],
        [1.0 / R2, 0.0, 1.0 / R2],
    ],
    dtype=complex,
)
LIV3_KER = np.array([[1.0], [0.0], [0.0]], dtype=complex)


def liv3_w(z):
    z = complex(z)
    return -z * ((z - 1 / R2) / (1 - z / R2)) ** 2


# defect-two 4x4
LIV4_A = np.array(
    [
        [0.0, 0.0, 0.0, 0.0],
        [1.0 / R2, -1.0 / R2, 0.0, 0.0],
        [0.5, 0.5, 0.0, 0.0],
        [0.5, 0.5, 0.0, 0.0],
    ],
    dtype=complex,
)
LIV4_U = np.array(
    [
        [0.0, 0.0, 1.0, 0.0],
        [1.0 / R2, -1.0 / R2, 0.0, 0.0],
        [0.5, 0.5, 0.0, -1.0 / R2],
        [0.5, 0.5, 0.0, 1.0 / R2],
    ],
    dtype=complex,
)
LIV4_KER = np.zeros((4, 2), dtype=complex)
LIV4_KER[3, 0] = 1.0
LIV4_KER[2, 1] = 1.0


def liv4_w(z):
    z = complex(z)
    g = z * z * (2 * z + R2) / (2 * (z + R2))
    return np.array([[z / R2, g], [-z / R2, g]], dtype=complex)


# defect-three 5x5
LIV5_A = np.array(
    [
        [0.0, 0.5, 0.0, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, 0.0, 0.5, 0.0],
        [0.0, 1.0 / R2, 0.0, -1.0 / R2, 0.0],
        [0.0, 0.0, 0.0, 0.0, 0.0],
    ],
    dtype=complex,
)
LIV5_U = np.array(
    [
        [0.0, 0.5, -1.0 / R2, 0.5, 0.0],
        [1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, 1.0 / R2, 0.5, 0.0],
        [0.0, 1.0 / R2, 0.0, -1.0 / R2, 0.0],
        [0.0, 0.0, 0.0, 0.0, 1.0],
    ],
    dtype=complex,
)
LIV5_KER = np.zeros((5, 3), dtype=complex)
LIV5_KER[4, 0] = 1.0
LIV5_KER[2, 1] = 1.0
LIV5_KER[0, 2] = 1.0


def liv5_w(z):
    z = complex(z)
    g = z * z * (2 * z + R2) / (2 * (z + R2))
    return np.array(
        [[z, 0.0, 0.0], [0.0, z / R2, g], [0.0, -z / R2, g]], dtype=complex
    )


def _perm_cols(n, images):
    """Unitary sending e_j -> e_{images[j]}."""
    u = np.zeros((n, n), dtype=complex)
    for j, i in enumerate(images):
        u[i, j] = 1.0
    return u


# unitary extensions of the nilpotent pair that make the characteristic
# functions come out diagonal: diag(z, z^3) versus diag(z^2, z^2)
ABHML_A_U = _perm_cols(4, [2, 0, 1, 3])
ABHML_A_KER = np.zeros((4, 2), dtype=complex)
ABHML_A_KER[3, 0] = 1.0
ABHML_A_KER[0, 1] = 1.0

ABHML_B_U = _perm_cols(4, [1, 0, 3, 2])
ABHML_B_KER = np.zeros((4, 2), dtype=complex)
ABHML_B_KER[0, 0] = 1.0
ABHML_B_KER[2, 1] = 1.0


def abhml_a_w(z):
    z = complex(z)
    return np.diag([z, z ** 3]).astype(complex)


def abhml_b_w(z):
    z = complex(z)
    return np.diag([z * z, z * z]).astype(complex)


# --- random generators -----------------------------------------------------


def random_unitary(rng, n):
    q, r = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_pi(rng, n, r=None):
    """Random n x n partial isometry of rank r (default: uniform in 0..n)."""
    if r is None:
        r = int(rng.integers(0, n + 1))
    u = random_unitary(rng, n)
    v = random_unitary(rng, n)
    x = np.zeros((n, n), dtype=complex)
    x[:r, :r] = np.eye(r)
    return u @ x @ v.conj().T


def random_contraction(rng, n, top=1.0):
    """Random n x n matrix rescaled so the largest singular value is `top`."""
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    s = np.linalg.svd(a, compute_uv=False)
    return a * (top / s[0])


def radial_limit(lf, zeta, eps=1e-6):
    """Boundary value of a characteristic function, taken as a radial limit.

    Direct evaluation at radius 1-eps is off by O(eps) (Schwarz: the values
    stay inside the ball of radius 1-eps, so the unitarity defect is at least
    1-(1-eps)^2).  First-order extrapolation along the radius removes that
    term, leaving an O(eps^2) estimate of the limit.
    """
    from pimatrix.livsic import livsic_eval

    w1 = livsic_eval(lf, (1.0 - eps) * zeta)
    w2 = livsic_eval(lf, (1.0 - 2.0 * eps) * zeta)
    return 2.0 * w1 - w2
