"""Tilings of a planar domain by rigid images of a tile, sign-twisted
prolongation and folding operators between functions on the tile and on the
covered domain, admissibility checks for the sign pattern, and pullbacks of
observation regions.

A tiling here is a finite family of rigid motions K_1..K_N sending a convex
tile onto essentially disjoint pieces whose closures cover the target.  Given
signs d_1..d_N, prolongation copies a tile function u to the target by
(Pu)(K_h x) = d_h u(x), and folding averages back:
(F v)(x) = (1/N^2) * sum_h d_h v(K_h x), so that F(Pu) = u / N.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import kernels
from .geometry import (
    BOUNDARY_TOL,
    TRIANGLE_LEG_X,
    ConvexPolygon,
    FOLD_SIGNS,
    RigidMotion,
    as_points,
    axis_rectangle,
    folding_motions,
    identity_motion,
    motion_image,
    reference_triangle,
    target_rectangle,
)


@dataclass(frozen=True)
class Tiling:
    """A tile, a target domain, the motions placing the tile, and optional signs."""

    tile: ConvexPolygon
    target: ConvexPolygon
    motions: tuple[RigidMotion, ...]
    signs: Optional[tuple[int, ...]] = None
    name: str = ""

    def __post_init__(self):
        motions = tuple(self.motions)
        if not motions:
            raise ValueError("a tiling needs at least one motion")
        object.__setattr__(self, "motions", motions)
        if self.signs is not None:
            signs = tuple(int(s) for s in self.signs)
            if len(signs) != len(motions):
                raise ValueError("signs must match the number of motions")
            if any(s not in (-1, 1) for s in signs):
                raise ValueError("signs must be +1 or -1")
            object.__setattr__(self, "signs", signs)

    @property
    def n_tiles(self) -> int:
        return len(self.motions)

    def motion_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """Stacked (N, 2, 2) linear parts and (N, 2) shifts."""
        lin = np.stack([m.linear for m in self.motions])
        sh = np.stack([m.shift for m in self.motions])
        return lin, sh

    def tile_images(self) -> list[ConvexPolygon]:
        """The N image polygons of the tile."""
        return [motion_image(self.tile, m) for m in self.motions]

    def require_signs(self) -> tuple[int, ...]:
        if self.signs is None:
            raise ValueError("this tiling carries no sign pattern")
        return self.signs


@dataclass(frozen=True)
class PointFunction:
    """A vectorized evaluator together with the polygon it lives on.

    Calling it with points of shape (n, 2) returns values of shape (n,).
    Points outside the closed domain (beyond ``tol``) raise ValueError.
    """

    fn: Callable[[np.ndarray], np.ndarray]
    domain: ConvexPolygon
    tol: float = BOUNDARY_TOL

    def __call__(self, points) -> np.ndarray:
        p = as_points(points)
        sd = self.domain.signed_distance(p)
        if (sd < -self.tol).any():
            bad = p[sd < -self.tol][:3]
            raise ValueError(f"evaluation outside the domain, e.g. {bad.tolist()}")
        return np.asarray(self.fn(p), dtype=float).reshape(p.shape[0])


def as_point_function(f, domain: ConvexPolygon) -> PointFunction:
    if isinstance(f, PointFunction):
        return f
    return PointFunction(f, domain)


# ---------------------------------------------------------------------------
# tiling validation
# ---------------------------------------------------------------------------


@dataclass
class TilingReport:
    """Monte Carlo tiling check result."""

    n_samples: int
    coverage_fraction: float
    max_overlap_count: int
    passed: bool
    uncovered: np.ndarray = field(default_factory=lambda: np.empty((0, 2)))
    overlapping: np.ndarray = field(default_factory=lambda: np.empty((0, 2)))


def _sample_interior(poly: ConvexPolygon, n: int, rng: np.random.Generator) -> np.ndarray:
    x0, x1, y0, y1 = poly.bounding_box
    out = np.empty((0, 2))
    while out.shape[0] < n:
        cand = rng.uniform([x0, y0], [x1, y1], size=(2 * n, 2))
        keep = poly.signed_distance(cand) > 0
        out = np.vstack([out, cand[keep]])
    return out[:n]


def validate_tiling(
    tiling: Tiling,
    n_samples: int = 100_000,
    tol: float = BOUNDARY_TOL,
    seed: int = 0,
) -> TilingReport:
    """Monte Carlo check that the tile images cover the target without overlap.

    Draws uniform samples in the target; each must lie in exactly one open
    tile image or within ``tol`` of an image boundary.  The check passes when
    the coverage fraction is 1.0 and no sample is strictly inside two images.
    """
    if n_samples < 1000:
        raise ValueError("n_samples must be at least 1000")
    rng = np.random.default_rng(seed)
    samples = _sample_interior(tiling.target, n_samples, rng)
    n_inside = np.zeros(n_samples, dtype=int)
    n_boundary = np.zeros(n_samples, dtype=int)
    for motion in tiling.motions:
        back = motion.invert().apply(samples)
        sd = tiling.tile.signed_distance(back)
        n_inside += sd > tol
        n_boundary += np.abs(sd) <= tol
    covered = (n_inside + n_boundary) >= 1
    coverage = float(covered.mean())
    max_overlap = int(n_inside.max())
    passed = coverage == 1.0 and max_overlap <= 1
    return TilingReport(
        n_samples=n_samples,
        coverage_fraction=coverage,
        max_overlap_count=max_overlap,
        passed=passed,
        uncovered=samples[~covered][:20],
        overlapping=samples[n_inside > 1][:20],
    )


# ---------------------------------------------------------------------------
# prolongation and folding
# ---------------------------------------------------------------------------


def prolong(u, tiling: Tiling, signs: Optional[Sequence[int]] = None) -> PointFunction:
    """Sign-twisted prolongation of a tile function to the target.

    The value at a target point y in the image K_h(tile) is d_h * u(K_h^-1 y).
    Points on an image interface take the value from the lowest motion index.
    """
    signs = tuple(signs) if signs is not None else tiling.require_signs()
    u_fn = as_point_function(u, tiling.tile)
    inverses = [m.invert() for m in tiling.motions]

    def evaluate(p: np.ndarray) -> np.ndarray:
        vals = np.zeros(p.shape[0])
        assigned = np.zeros(p.shape[0], dtype=bool)
        for h, inv in enumerate(inverses):
            todo = ~assigned
            if not todo.any():
                break
            back = inv.apply(p[todo])
            ok = tiling.tile.signed_distance(back) >= -BOUNDARY_TOL
            idx = np.flatnonzero(todo)[ok]
            if idx.size:
                vals[idx] = signs[h] * u_fn(back[ok])
                assigned[idx] = True
        if not assigned.all():
            bad = p[~assigned][:3]
            raise ValueError(f"points not covered by any tile image, e.g. {bad.tolist()}")
        return vals

    return PointFunction(evaluate, tiling.target)


def fold(v, tiling: Tiling, signs: Optional[Sequence[int]] = None) -> PointFunction:
    """Folding of a target function back onto the tile.

    (F v)(x) = (1 / N^2) * sum_h d_h v(K_h x); the inverse of prolongation up
    to the factor 1/N: fold(prolong(u)) == u / N.
    """
    signs = tuple(signs) if signs is not None else tiling.require_signs()
    v_fn = as_point_function(v, tiling.target)
    scale = 1.0 / tiling.n_tiles**2

    def evaluate(p: np.ndarray) -> np.ndarray:
        acc = np.zeros(p.shape[0])
        for h, motion in enumerate(tiling.motions):
            acc += signs[h] * v_fn(motion.apply(p))
        return scale * acc

    return PointFunction(evaluate, tiling.tile)


# ---------------------------------------------------------------------------
# admissibility of sign patterns
# ---------------------------------------------------------------------------


def _cluster_constraints(tiling: Tiling, n_per_edge: int, tol: float) -> list[tuple[int, ...]]:
    """Constraint rows for sign admissibility from tile-boundary samples.

    For each boundary sample x of the tile, the images K_h x are grouped by
    proximity (radius ``tol``).  A group lying on the target boundary imposes
    nothing; any other group must have its signs cancel.  Returns the distinct
    groups as sorted tuples of motion indices.
    """
    samples = tiling.tile.boundary_samples(n_per_edge)
    n = tiling.n_tiles
    rows: set[tuple[int, ...]] = set()
    target_sd = tiling.target.signed_distance
    for x in samples:
        imgs = np.stack([m.apply(x) for m in tiling.motions])
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in range(n):
            for j in range(i + 1, n):
                if np.hypot(*(imgs[i] - imgs[j])) <= tol:
                    parent[find(i)] = find(j)
        groups: dict[int, list[int]] = {}
        for h in range(n):
            groups.setdefault(find(h), []).append(h)
        on_boundary = np.abs(target_sd(imgs)) <= tol
        for members in groups.values():
            if not on_boundary[members].all():
                rows.add(tuple(sorted(members)))
    return sorted(rows)


def boundary_cancellation_check(
    tiling: Tiling,
    signs: Optional[Sequence[int]] = None,
    n_per_edge: int = 64,
    tol: float = BOUNDARY_TOL,
) -> bool:
    """Structural admissibility: along the tile boundary, images either land on
    the target boundary or appear in groups whose signs sum to zero."""
    signs = tuple(signs) if signs is not None else tiling.require_signs()
    rows = _cluster_constraints(tiling, n_per_edge, tol)
    return all(sum(signs[h] for h in row) == 0 for row in rows)


def find_admissible_signs(
    tiling: Tiling, n_per_edge: int = 64, tol: float = BOUNDARY_TOL
) -> list[tuple[int, ...]]:
    """Enumerate all sign patterns passing the boundary cancellation check."""
    n = tiling.n_tiles
    if n > 20:
        raise ValueError("sign enumeration is limited to 20 tiles")
    rows = _cluster_constraints(tiling, n_per_edge, tol)
    found = []
    for cand in itertools.product((1, -1), repeat=n):
        if all(sum(cand[h] for h in row) == 0 for row in rows):
            found.append(cand)
    return found


def functional_admissibility_check(
    tiling: Tiling,
    signs: Optional[Sequence[int]] = None,
    n_test_functions: int = 20,
    tol: float = 1e-8,
    seed: int = 0,
) -> bool:
    """Functional admissibility: folds of random target eigenmode combinations
    must vanish on the tile boundary.

    The target must be an axis-aligned rectangle so that its Dirichlet modes
    are separable sine products.  Each test function is a random combination
    of the first 4 x 4 modes; the check fails if any fold exceeds
    ``tol * sup |phi|`` at a tile boundary sample.
    """
    signs = tuple(signs) if signs is not None else tiling.require_signs()
    if not tiling.target.is_axis_rectangle():
        raise ValueError("functional check needs an axis-aligned rectangle target")
    x0, x1, y0, y1 = tiling.target.bounding_box
    lx, ly = x1 - x0, y1 - y0
    rng = np.random.default_rng(seed)
    m1, m2 = np.meshgrid(np.arange(1, 5), np.arange(1, 5), indexing="ij")
    m1 = m1.ravel().astype(float)
    m2 = m2.ravel().astype(float)

    def phi_matrix(points: np.ndarray) -> np.ndarray:
        rel = points - np.array([x0, y0])
        return kernels.rect_modes(rel, m1, m2, np.pi / lx, np.pi / ly)

    bd = tiling.tile.boundary_samples(64)
    fold_mat = np.zeros((bd.shape[0], m1.size))
    for h, motion in enumerate(tiling.motions):
        fold_mat += signs[h] * phi_matrix(motion.apply(bd))
    fold_mat /= tiling.n_tiles**2
    gx = np.linspace(x0, x1, 50)[1:-1]
    gy = np.linspace(y0, y1, 50)[1:-1]
    grid = np.stack(np.meshgrid(gx, gy, indexing="ij"), axis=-1).reshape(-1, 2)
    grid_mat = phi_matrix(grid)
    for _ in range(n_test_functions):
        a = rng.standard_normal(m1.size)
        sup = np.abs(grid_mat @ a).max()
        if np.abs(fold_mat @ a).max() > tol * sup:
            return False
    return True


# ---------------------------------------------------------------------------
# pullback of observation regions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PullbackRegion:
    """Preimage of a target-side region under the tiling motions.

    ``contains`` is the membership indicator [exists h with K_h x in region];
    ``count`` is the number of motions carrying x into the region, which is
    the weight that makes target-side integrals split exactly over the tile
    (overlapping preimages are counted with multiplicity).
    """

    tiling: Tiling
    region: tuple[ConvexPolygon, ...]

    def count(self, points) -> np.ndarray:
        p = as_points(points)
        cnt = np.zeros(p.shape[0], dtype=int)
        for motion in self.tiling.motions:
            img = motion.apply(p)
            inside = np.zeros(p.shape[0], dtype=bool)
            for poly in self.region:
                inside |= poly.signed_distance(img) > 0
            cnt += inside
        return cnt

    def contains(self, points) -> np.ndarray:
        return self.count(points) >= 1

    def __call__(self, points) -> np.ndarray:
        return self.contains(points)


def pullback_region(region, tiling: Tiling) -> PullbackRegion:
    """Pull a target-side region (polygon or sequence of polygons) back to the tile."""
    if isinstance(region, ConvexPolygon):
        region = (region,)
    return PullbackRegion(tiling, tuple(region))


# ---------------------------------------------------------------------------
# concrete tilings
# ---------------------------------------------------------------------------


def triangle_rectangle_tiling() -> Tiling:
    """Six images of the 30-60-90 triangle covering (0, sqrt(3)) x (0, 1),
    with the alternating sign pattern that makes the folding admissible."""
    return Tiling(
        tile=reference_triangle(),
        target=target_rectangle(),
        motions=folding_motions(),
        signs=FOLD_SIGNS,
        name="triangle-rectangle",
    )


def square_quadrant_tiling() -> Tiling:
    """Four reflected copies of (0, pi)^2 covering (0, 2*pi)^2."""
    pi = np.pi
    return Tiling(
        tile=axis_rectangle(0.0, pi, 0.0, pi),
        target=axis_rectangle(0.0, 2 * pi, 0.0, 2 * pi),
        motions=(
            identity_motion(),
            RigidMotion(np.diag([-1.0, 1.0]), np.array([2 * pi, 0.0])),
            RigidMotion(np.diag([1.0, -1.0]), np.array([0.0, 2 * pi])),
            RigidMotion(-np.eye(2), np.array([2 * pi, 2 * pi])),
        ),
        signs=(1, -1, -1, 1),
        name="square-quadrant",
    )


def half_rectangle_tiling() -> Tiling:
    """The triangle and its half-turn image covering (0, 1/sqrt(3)) x (0, 1).

    The shared hypotenuse maps onto itself with its endpoints swapped, so no
    sign pattern can cancel there: the tiling admits no admissible signs.
    """
    return Tiling(
        tile=reference_triangle(),
        target=axis_rectangle(0.0, TRIANGLE_LEG_X, 0.0, 1.0),
        motions=(
            identity_motion(),
            RigidMotion(-np.eye(2), np.array([TRIANGLE_LEG_X, 1.0])),
        ),
        signs=None,
        name="half-rectangle",
    )


def displaced_triangle_tiling() -> Tiling:
    """Variant of the six-motion family with the bottom-row translations built
    from the transposed leg vector (0, 1/sqrt(3)).  It does not tile the
    rectangle (the right half stays uncovered) and exists as a negative test
    case for the validator."""
    c, s = np.cos(np.pi / 3.0), np.sin(np.pi / 3.0)
    rot = np.array([[c, -s], [s, c]])
    rot_mir = rot @ np.diag([1.0, -1.0])
    u1 = np.array([0.0, TRIANGLE_LEG_X])
    u2 = np.array([0.0, 1.0])
    return Tiling(
        tile=reference_triangle(),
        target=target_rectangle(),
        motions=(
            identity_motion(),
            RigidMotion(-rot_mir, u2 + rot_mir @ u2),
            RigidMotion(rot, u2 - rot @ u2),
            RigidMotion(-rot, 3 * u1 + rot @ u2),
            RigidMotion(rot_mir, 3 * u1 - rot_mir @ u2),
            RigidMotion(-np.eye(2), 3 * u1 + u2),
        ),
        signs=FOLD_SIGNS,
        name="displaced-triangle",
    )


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return format(float(x), ".15g")


def _poly_line(poly: ConvexPolygon) -> str:
    return "; ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in poly.vertices)


def _canonical_lines(tiling: Tiling) -> list[str]:
    lines = [
        f"tile = {_poly_line(tiling.tile)}",
        f"target = {_poly_line(tiling.target)}",
        f"n_motions = {tiling.n_tiles}",
    ]
    for i, m in enumerate(tiling.motions, start=1):
        flat = ",".join(_fmt(v) for v in m.linear.ravel())
        lines.append(f"motion_{i}_linear = {flat}")
        lines.append(f"motion_{i}_shift = {_fmt(m.shift[0])},{_fmt(m.shift[1])}")
    if tiling.signs is not None:
        lines.append("signs = " + ",".join(str(s) for s in tiling.signs))
    return lines


def tiling_digest(tiling: Tiling) -> str:
    """SHA-256 digest of the canonical 15-significant-digit serialization."""
    text = "\n".join(_canonical_lines(tiling))
    return hashlib.sha256(text.encode()).hexdigest()


def save_tiling(tiling: Tiling, path) -> None:
    lines = ["# tilewave tiling v1"]
    if tiling.name:
        lines.append(f"name = {tiling.name}")
    lines.extend(_canonical_lines(tiling))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _parse_poly(text: str) -> ConvexPolygon:
    pts = []
    for chunk in text.split(";"):
        x, y = chunk.split(",")
        pts.append((float(x), float(y)))
    return ConvexPolygon(np.array(pts))


def load_tiling(path) -> Tiling:
    entries: dict[str, str] = {}
    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"malformed tiling line: {line!r}")
            key, _, value = line.partition("=")
            entries[key.strip()] = value.strip()
    try:
        tile = _parse_poly(entries["tile"])
        target = _parse_poly(entries["target"])
        n = int(entries["n_motions"])
        motions = []
        for i in range(1, n + 1):
            lin = np.array([float(v) for v in entries[f"motion_{i}_linear"].split(",")])
            sh = np.array([float(v) for v in entries[f"motion_{i}_shift"].split(",")])
            motions.append(RigidMotion(lin.reshape(2, 2), sh))
    except KeyError as exc:
        raise ValueError(f"tiling file is missing entry {exc}") from exc
    signs = None
    if "signs" in entries:
        signs = tuple(int(v) for v in entries["signs"].split(","))
    return Tiling(
        tile=tile,
        target=target,
        motions=tuple(motions),
        signs=signs,
        name=entries.get("name", ""),
    )
