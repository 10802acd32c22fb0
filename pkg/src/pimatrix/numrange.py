"""Numerical ranges: support sweeps, normal hulls, and polygon intersections.

The numerical range of an n x n matrix is convex and compact; its support
function in direction theta is the top eigenvalue of the Hermitian part of
e^{-i theta} A. For the defect-one models there is a second route: the range
is the intersection over unimodular xi of the convex polygons spanned by the
preimages of xi under the boundary Blaschke product b(z) = z^2 * prod(...).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_CFG, ToleranceCfg, as_matrix
from .errors import EmptyIntersection, NotNormal
from .modelspace import BlaschkeProduct, ModelParams, blaschke_preimages

__all__ = [
    "NRRegion",
    "nr_sweep",
    "nr_normal_hull",
    "nr_polygon_Q",
    "nr_intersection",
    "nr_equal",
    "region_support",
    "hausdorff",
    "convex_hull",
    "conic_fit_residual",
]


@dataclass(frozen=True)
class NRRegion:
    """Sampled description of a convex region in the plane.

    samples   tuple of (theta, support value, boundary point) triples
    vertices  polygon vertices (CCW) when an exact polygon is known
    """

    samples: tuple[tuple[float, float, complex], ...]
    vertices: tuple[complex, ...] | None = None


def nr_sweep(a, m: int = 360) -> NRRegion:
    """Support-function sweep of the numerical range at m equispaced angles."""
    a = as_matrix(a)
    samples = []
    for k in range(m):
        theta = 2.0 * np.pi * k / m
        h = (np.exp(-1j * theta) * a + np.exp(1j * theta) * a.conj().T) / 2.0
        w, vecs = np.linalg.eigh(h)
        x = vecs[:, -1]
        samples.append((theta, float(w[-1]), complex(np.vdot(x, a @ x))))
    return NRRegion(samples=tuple(samples))


def convex_hull(points) -> list[complex]:
    """Monotone-chain hull, CCW, degenerate inputs allowed (may return < 3 points)."""
    pts = sorted(set((complex(p).real, complex(p).imag) for p in points))
    if len(pts) <= 2:
        return [complex(x, y) for x, y in pts]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:  # fully collinear input
        hull = [pts[0], pts[-1]]
    return [complex(x, y) for x, y in hull]


def _region_from_vertices(verts: list[complex], m: int) -> NRRegion:
    vs = np.asarray(verts, dtype=complex)
    samples = []
    for k in range(m):
        theta = 2.0 * np.pi * k / m
        proj = np.real(np.exp(-1j * theta) * vs)
        j = int(np.argmax(proj))
        samples.append((theta, float(proj[j]), complex(vs[j])))
    return NRRegion(samples=tuple(samples), vertices=tuple(complex(v) for v in verts))


def nr_normal_hull(a, cfg: ToleranceCfg = DEFAULT_CFG, m: int = 360) -> NRRegion:
    """Numerical range of a normal matrix: the convex hull of its eigenvalues."""
    a = as_matrix(a)
    comm = a @ a.conj().T - a.conj().T @ a
    scale = max(1.0, float(np.linalg.norm(a)) ** 2)
    if float(np.linalg.norm(comm, 2)) > 100 * cfg.abs_tol * scale:
        raise NotNormal("matrix does not commute with its adjoint")
    from .core import eigenvalues

    return _region_from_vertices(convex_hull(eigenvalues(a)), m)


def nr_polygon_Q(p: ModelParams, xi: complex, cfg: ToleranceCfg = DEFAULT_CFG) -> list[complex]:
    """Vertices (CCW by angle) of the polygon spanned by the preimages of xi.

    The preimages are taken under the boundary product b(z) = z^2 prod(...);
    there are n + 1 of them, all unimodular and distinct, so the polygon is
    inscribed in the unit circle.
    """
    b = p.boundary_blaschke()
    roots = blaschke_preimages(b, xi, cfg)
    order = np.argsort(np.angle(roots) % (2 * np.pi))
    return [complex(z) for z in roots[order]]


def _clip_halfplane(poly: list[complex], a: complex, c: float, eps: float = 1e-12) -> list[complex]:
    """Keep the part of a polygon with Re(conj(a) * z) <= c (+ eps slack)."""
    if not poly:
        return []
    out: list[complex] = []
    k = len(poly)
    for i in range(k):
        p, q = poly[i], poly[(i + 1) % k]
        fp = (np.conj(a) * p).real - c
        fq = (np.conj(a) * q).real - c
        if fp <= eps:
            out.append(p)
        if (fp <= eps) != (fq <= eps) and abs(fq - fp) > 0.0:
            t = fp / (fp - fq)
            out.append(p + t * (q - p))
    return out


def nr_intersection(p: ModelParams, m: int = 360, cfg: ToleranceCfg = DEFAULT_CFG) -> NRRegion:
    """Numerical range of the model matrix as an intersection of polygons.

    Clips a bounding square successively by the half-planes of every edge of
    Q_xi over m unimodular xi values. Raises EmptyIntersection if the region
    vanishes (it never should: 0 always belongs to it).
    """
    poly: list[complex] = [2 + 2j, -2 + 2j, -2 - 2j, 2 - 2j]
    for k in range(m):
        xi = np.exp(2j * np.pi * k / m)
        verts = nr_polygon_Q(p, xi, cfg)
        kk = len(verts)
        for i in range(kk):
            # for kk == 2 this walks the segment twice, imposing both of its
            # half-planes, which pins the region onto the segment's line
            v, w = verts[i], verts[(i + 1) % kk]
            edge = w - v
            if abs(edge) < 1e-14:
                continue
            normal = edge * (-1j)  # outward for CCW vertices
            c = (np.conj(normal) * v).real
            poly = _clip_halfplane(poly, normal, c)
            if not poly:
                raise EmptyIntersection("polygon intersection collapsed to nothing")
    hull = convex_hull(poly)
    if not hull:
        raise EmptyIntersection("polygon intersection collapsed to nothing")
    return _region_from_vertices(hull, m)


def nr_equal(a, b, m: int = 360, cfg: ToleranceCfg = DEFAULT_CFG) -> bool:
    """Support functions agree at m angles within a resolution-scaled slack."""
    ra = nr_sweep(a, m)
    rb = nr_sweep(b, m)
    slack = 10.0 / m
    return all(
        abs(sa[1] - sb[1]) <= slack for sa, sb in zip(ra.samples, rb.samples)
    )


def region_support(region: NRRegion, theta: float) -> float:
    """Support value of a region in direction theta.

    Prefers exact vertices, then an exactly matching sweep sample; otherwise
    takes the max over the sampled boundary points (a lower bound that is
    tight for dense sweeps).
    """
    if region.vertices:
        vs = np.asarray(region.vertices, dtype=complex)
        return float(np.max(np.real(np.exp(-1j * theta) * vs)))
    for th, sup, _ in region.samples:
        if abs(th - theta) < 1e-12:
            return sup
    pts = np.asarray([s[2] for s in region.samples], dtype=complex)
    return float(np.max(np.real(np.exp(-1j * theta) * pts)))


def hausdorff(ra: NRRegion, rb: NRRegion, m: int = 720) -> float:
    """Hausdorff distance between convex regions via support functions."""
    worst = 0.0
    for k in range(m):
        theta = 2.0 * np.pi * k / m
        worst = max(worst, abs(region_support(ra, theta) - region_support(rb, theta)))
    return worst


def conic_fit_residual(points) -> float:
    """RMS algebraic residual of the best-fit conic through the points.

    Builds the design matrix of monomials (x^2, xy, y^2, x, y, 1) and returns
    the smallest singular value scaled by 1/sqrt(N); exact conics give ~0.
    """
    pts = np.asarray([complex(z) for z in points])
    x = pts.real
    y = pts.imag
    d = np.column_stack([x * x, x * y, y * y, x, y, np.ones_like(x)])
    s = np.linalg.svd(d, compute_uv=False)
    return float(s[-1] / np.sqrt(len(pts)))
