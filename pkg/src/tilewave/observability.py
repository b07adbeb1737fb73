"""Internal observability functionals for spectral wave solutions.

The observed energy of a solution u over a region S and horizon T is
    E(u) = int_0^T int_S |u(t, x)|^2 dx dt.
Because solutions are modal, E is an explicit quadratic form in the initial
coefficients, built from a spatial Gram matrix over S and closed-form time
integrals of cos/sin products.  The observability constants are the extreme
eigenvalues of that form measured against the L^2 x H^-1 norm of the data.

Regions are either unions of convex polygons integrated exactly (tensor
Gauss-Legendre on axis rectangles, collapsed tensor rules on triangles), or
pullbacks of a target-side region through a tiling, integrated with a
subdivided composite rule that weights each node by the number of motions
carrying it into the region.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .geometry import BOUNDARY_TOL, ConvexPolygon
from .tiling import PullbackRegion, Tiling, pullback_region
from .wavesim import WaveState

# 6-point degree-4 simplex rule (two interior 3-orbits); weights sum to 1
_ORBIT_A = (0.445948490915965, 0.223381589678011)
_ORBIT_B = (0.091576213509771, 0.109951743655322)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes (n, 2) and weights (n,) for integration over a plane region."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float).reshape(-1, 2)
        wts = np.asarray(self.weights, dtype=float).reshape(-1)
        if pts.shape[0] != wts.shape[0]:
            raise ValueError("points and weights must have equal length")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "weights", wts)

    def integrate(self, f) -> float:
        return float(self.weights @ np.asarray(f(self.points), dtype=float).reshape(-1))


def _gauss_01(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on (0, 1)."""
    x, w = np.polynomial.legendre.leggauss(order)
    return 0.5 * (x + 1.0), 0.5 * w


def rect_quadrature(x0: float, x1: float, y0: float, y1: float, order: int) -> QuadratureRule:
    """Tensor Gauss-Legendre rule on an axis-aligned rectangle."""
    u, wu = _gauss_01(order)
    gx = x0 + (x1 - x0) * u
    gy = y0 + (y1 - y0) * u
    pts = np.stack(np.meshgrid(gx, gy, indexing="ij"), axis=-1).reshape(-1, 2)
    wts = ((x1 - x0) * (y1 - y0)) * np.outer(wu, wu).ravel()
    return QuadratureRule(pts, wts)


def triangle_quadrature(vertices, order: int) -> QuadratureRule:
    """Collapsed tensor Gauss-Legendre rule on a triangle.

    Maps the unit square to the reference simplex by (u, v) -> (u(1-v), uv),
    which has Jacobian u, then affinely onto the given triangle.
    """
    v = np.asarray(vertices, dtype=float).reshape(3, 2)
    u, wu = _gauss_01(order)
    uu, vv = np.meshgrid(u, u, indexing="ij")
    xi = (uu * (1.0 - vv)).ravel()
    eta = (uu * vv).ravel()
    w_ref = (np.outer(wu, wu) * uu).ravel()
    e1, e2 = v[1] - v[0], v[2] - v[0]
    jac = abs(e1[0] * e2[1] - e1[1] * e2[0])
    pts = v[0] + np.outer(xi, e1) + np.outer(eta, e2)
    return QuadratureRule(pts, w_ref * jac)


def polygon_quadrature(poly: ConvexPolygon, order: int) -> QuadratureRule:
    """Quadrature on a convex polygon: tensor rule for axis rectangles, a
    collapsed rule for triangles, and a fan of triangles otherwise."""
    if poly.is_axis_rectangle():
        x0, x1, y0, y1 = poly.bounding_box
        return rect_quadrature(x0, x1, y0, y1, order)
    v = poly.vertices
    if poly.n_vertices == 3:
        return triangle_quadrature(v, order)
    rules = [
        triangle_quadrature(np.stack([v[0], v[i], v[i + 1]]), order)
        for i in range(1, poly.n_vertices - 1)
    ]
    return QuadratureRule(
        np.vstack([r.points for r in rules]), np.concatenate([r.weights for r in rules])
    )


def region_quadrature(region: Sequence[ConvexPolygon], order: int) -> QuadratureRule:
    """Concatenated quadrature over a union of disjoint convex polygons."""
    rules = [polygon_quadrature(poly, order) for poly in region]
    return QuadratureRule(
        np.vstack([r.points for r in rules]), np.concatenate([r.weights for r in rules])
    )


def subdivided_triangle_quadrature(vertices, level: int) -> QuadratureRule:
    """Composite rule on a triangle split into 4^level congruent cells.

    Each cell carries a 6-point degree-4 rule with strictly interior nodes at
    irrational barycentric coordinates, so piecewise-defined weights (such as
    pullback counts) are never sampled on a dividing line.
    """
    if level < 0:
        raise ValueError("level must be nonnegative")
    v = np.asarray(vertices, dtype=float).reshape(3, 2)
    m = 2**level
    cells = []
    for i in range(m):
        for j in range(m - i):
            p00 = v[0] + (i / m) * (v[1] - v[0]) + (j / m) * (v[2] - v[0])
            p10 = v[0] + ((i + 1) / m) * (v[1] - v[0]) + (j / m) * (v[2] - v[0])
            p01 = v[0] + (i / m) * (v[1] - v[0]) + ((j + 1) / m) * (v[2] - v[0])
            cells.append((p00, p10, p01))
            if j < m - i - 1:
                p11 = v[0] + ((i + 1) / m) * (v[1] - v[0]) + ((j + 1) / m) * (v[2] - v[0])
                cells.append((p10, p11, p01))
    cells = np.asarray(cells)  # (n_cells, 3, 2)

    bary = []
    cell_w = []
    for a, w in (_ORBIT_A, _ORBIT_B):
        for perm in ((a, a, 1 - 2 * a), (a, 1 - 2 * a, a), (1 - 2 * a, a, a)):
            bary.append(perm)
            cell_w.append(w)
    bary = np.asarray(bary)  # (6, 3)
    cell_w = np.asarray(cell_w)  # (6,)

    pts = np.einsum("qb,cbx->cqx", bary, cells).reshape(-1, 2)
    e1, e2 = v[1] - v[0], v[2] - v[0]
    cell_area = 0.5 * abs(e1[0] * e2[1] - e1[1] * e2[0]) / (m * m)
    wts = np.tile(cell_w * cell_area, cells.shape[0])
    return QuadratureRule(pts, wts)


# ---------------------------------------------------------------------------
# observation setups and the energy quadratic form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ObservationSetup:
    """An observation region with a time horizon and integration parameters.

    ``region`` is a union of convex polygons.  Without a pullback they are
    integrated directly and must lie inside the basis domain.  With
    ``pullback`` set, the region lives on the tiling target and is observed
    through the tiling: integration happens on the tile with a composite rule
    of the given subdivision level, each node weighted by the number of
    motions mapping it into the region.
    """

    region: tuple[ConvexPolygon, ...]
    horizon: float
    space_quad_order: int = 24
    pullback: Optional[Tiling] = None
    subdivision_level: int = 5

    def __post_init__(self):
        region = (
            (self.region,) if isinstance(self.region, ConvexPolygon) else tuple(self.region)
        )
        if not region:
            raise ValueError("the observation region must contain a polygon")
        object.__setattr__(self, "region", region)
        if not self.horizon > 0:
            raise ValueError("the horizon must be positive")


def _int_cos(a: np.ndarray, horizon: float) -> np.ndarray:
    """int_0^T cos(a t) dt, stable through a = 0."""
    return horizon * np.sinc(a * horizon / np.pi)


def _int_sin(a: np.ndarray, horizon: float) -> np.ndarray:
    """int_0^T sin(a t) dt, stable through a = 0."""
    half = 0.5 * a * horizon
    return horizon * np.sin(half) * np.sinc(half / np.pi)


def time_integral(w_i: float, w_j: float, horizon: float) -> np.ndarray:
    """The 2x2 matrix of int_0^T {cos,sin}(w_i t) * {cos,sin}(w_j t) dt."""
    wi, wj = float(w_i), float(w_j)
    cc = 0.5 * (_int_cos(np.array(wi - wj), horizon) + _int_cos(np.array(wi + wj), horizon))
    ss = 0.5 * (_int_cos(np.array(wi - wj), horizon) - _int_cos(np.array(wi + wj), horizon))
    cs = 0.5 * (_int_sin(np.array(wj + wi), horizon) + _int_sin(np.array(wj - wi), horizon))
    sc = 0.5 * (_int_sin(np.array(wi + wj), horizon) + _int_sin(np.array(wi - wj), horizon))
    return np.array([[cc, cs], [sc, ss]], dtype=float)


def _time_matrices(w: np.ndarray, horizon: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pairwise cos*cos, cos*sin, sin*sin time integrals for all frequencies."""
    diff = np.subtract.outer(w, w)
    summ = np.add.outer(w, w)
    ic_diff = _int_cos(diff, horizon)
    ic_sum = _int_cos(summ, horizon)
    cc = 0.5 * (ic_diff + ic_sum)
    ss = 0.5 * (ic_diff - ic_sum)
    # cs[k, j] = int cos(w_k t) sin(w_j t) dt
    cs = 0.5 * (_int_sin(summ, horizon) + _int_sin(-diff, horizon))
    return cc, cs, ss


def spatial_gram(basis, setup: ObservationSetup) -> np.ndarray:
    """Gram matrix of the basis modes over the observation region.

    G[k, j] = int_S e_k e_j, with S either the direct union of polygons or
    the count-weighted pullback of a target-side region onto the tile.
    """
    if setup.pullback is not None:
        tiling = setup.pullback
        if not np.allclose(basis.domain.vertices, tiling.tile.vertices):
            raise ValueError("pullback observation needs a basis on the tiling tile")
        for poly in setup.region:
            if (tiling.target.signed_distance(poly.vertices) < -BOUNDARY_TOL).any():
                raise ValueError("pullback region must lie inside the tiling target")
        quad = subdivided_triangle_quadrature(tiling.tile.vertices, setup.subdivision_level)
        counts = PullbackRegion(tiling, setup.region).count(quad.points)
        weights = quad.weights * counts
    else:
        for poly in setup.region:
            if (basis.domain.signed_distance(poly.vertices) < -BOUNDARY_TOL).any():
                raise ValueError("observation region must lie inside the basis domain")
        quad = region_quadrature(setup.region, setup.space_quad_order)
        weights = quad.weights
    vals = basis.evaluate(quad.points)
    return (vals * weights[:, None]).T @ vals


def energy_form(basis, setup: ObservationSetup) -> np.ndarray:
    """The observed energy as a quadratic form on stacked data [c, d]."""
    gram = spatial_gram(basis, setup)
    w = np.sqrt(basis.eigenvalues())
    return _assemble_form(gram, w, setup.horizon)


def _assemble_form(gram: np.ndarray, w: np.ndarray, horizon: float) -> np.ndarray:
    cc, cs, ss = _time_matrices(w, horizon)
    top_left = gram * cc
    top_right = gram * cs / w[None, :]
    bottom_right = gram * ss / np.outer(w, w)
    n = w.size
    form = np.empty((2 * n, 2 * n))
    form[:n, :n] = top_left
    form[:n, n:] = top_right
    form[n:, :n] = top_right.T
    form[n:, n:] = bottom_right
    asym = float(np.abs(form - form.T).max())
    if asym > 1e-8 * max(float(np.abs(form).max()), 1e-300):
        raise FloatingPointError(f"energy form assembly lost symmetry ({asym:.3e})")
    return 0.5 * (form + form.T)


def observed_energy(state: WaveState, setup: ObservationSetup) -> float:
    """int_0^T int_S |u(t, x)|^2 dx dt for the solution with the given data."""
    form = energy_form(state.basis, setup)
    x = np.concatenate([state.c, state.d])
    return float(x @ form @ x)


# ---------------------------------------------------------------------------
# observability constants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ConstantEstimate:
    """Extreme ratios of observed energy to data norm on the modal subspace."""

    c1: float
    c2: float
    horizon: float
    n_modes: int


def _constants_from_form(form: np.ndarray, gamma: np.ndarray, horizon: float) -> ConstantEstimate:
    # data norm  |x|^2 = sum c^2 + sum d^2 / gamma  =  x^T B x
    # constants are the extreme eigenvalues of B^{-1/2} Q B^{-1/2}
    scale = np.concatenate([np.ones_like(gamma), np.sqrt(gamma)])
    sym = form * np.outer(scale, scale)
    eigs = np.linalg.eigvalsh(0.5 * (sym + sym.T))
    c1 = float(eigs[0])
    if -1e-12 < c1 < 0.0:
        c1 = 0.0
    return ConstantEstimate(c1=c1, c2=float(eigs[-1]), horizon=horizon, n_modes=gamma.size)


def estimate_constants(basis, setup: ObservationSetup) -> ConstantEstimate:
    """Sharp modal observability constants c1 <= E(u)/|data|^2 <= c2."""
    form = energy_form(basis, setup)
    return _constants_from_form(form, basis.eigenvalues(), setup.horizon)


def horizon_sweep(basis, setup: ObservationSetup, horizons: Sequence[float]) -> list[ConstantEstimate]:
    """Constants for several horizons, reusing the spatial Gram matrix."""
    gram = spatial_gram(basis, setup)
    w = np.sqrt(basis.eigenvalues())
    out = []
    for horizon in horizons:
        if not horizon > 0:
            raise ValueError("horizons must be positive")
        form = _assemble_form(gram, w, float(horizon))
        out.append(_constants_from_form(form, basis.eigenvalues(), float(horizon)))
    return out
