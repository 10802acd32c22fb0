"""Partially isometric matrices: detection, factorization, synthesis, comparison.

A square complex matrix A is a partial isometry when A @ A* @ A == A,
equivalently when its singular values all lie in {0, 1}. This package
detects them, produces their canonical factorizations, synthesizes them from
spectral data, decides similarity and unitary similarity, evaluates Livsic
characteristic functions and model-space data, and computes numerical
ranges. See the ``pim`` command-line tool for the same features on files.
"""

from .core import (
    DEFAULT_CFG,
    PolyC,
    ToleranceCfg,
    approx_eq,
    as_matrix,
    char_poly,
    eigenvalues,
    numeric_rank,
    schur,
    svd,
)
from .errors import (
    ConvergenceFailure,
    DefectMismatch,
    DefectNotOne,
    EmptyIntersection,
    IllConditioned,
    IndexOutOfRange,
    InputOutOfDisk,
    NotCnu,
    NotContraction,
    NotNormal,
    NotPartialIsometry,
    NotRealizable,
    NumericalFailure,
    OutsideDisk,
    PimError,
    RootOffCircle,
    ShapeMismatch,
    SingularDenominator,
    SpectralGapTooSmall,
    UnsupportedSize,
)
from .factor import (
    SvdCanonical,
    block_form,
    compress_to_N,
    is_pi_via_pseudoinverse,
    pi_polar,
    polar_factor,
    pseudoinverse,
    svd_canonical,
    unitary_extension,
)
from .livsic import (
    EquivalenceVerdict,
    LivsicFunction,
    livsic_build,
    livsic_defect1,
    livsic_equivalent,
    livsic_eval,
)
from .modelspace import (
    BlaschkeProduct,
    ModelParams,
    blaschke_eval,
    blaschke_preimages,
    kernel_eval,
    model_matrix,
    takenaka_eval,
)
from .numrange import (
    NRRegion,
    nr_equal,
    nr_intersection,
    nr_normal_hull,
    nr_polygon_Q,
    nr_sweep,
)
from .predicates import PIClassification, classify, defect, is_partial_isometry, projections
from .products import chain_is_pi, kronecker, min_pi_factors, product_is_pi
from .similar import JordanData, jordan_of, realize_similar_pi, similar_to_pi
from .synth import synth_from_roots, synth_superdiagonal, weyl_horn_feasible
from .usim import (
    DJOKOVIC_WORDS,
    PI_WORDS_N4,
    TraceSignature,
    UsimVerdict,
    Word,
    cnu_split,
    defect_one_usim,
    dilate,
    pi_usim_small,
    trace_signature,
    transpose_probe,
    unitarily_similar,
)

__version__ = "0.1.0"
