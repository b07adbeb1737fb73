"""Planar primitives: rigid motions, convex polygons, membership tests, and
the concrete six-motion folding geometry that maps a 30-60-90 triangle onto
a sqrt(3) x 1 rectangle."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

SQRT3 = math.sqrt(3.0)

#: default tolerance for boundary classification, in coordinate units
BOUNDARY_TOL = 1e-9

#: orthogonality / round-trip tolerance for rigid motions
MOTION_TOL = 1e-12

INSIDE = "inside"
BOUNDARY = "boundary"
OUTSIDE = "outside"


def as_points(p) -> np.ndarray:
    """Coerce a point or an (n, 2) batch of points to a float64 array.

    A single point may be given as any length-2 sequence; it is returned with
    shape (1, 2).  Non-finite coordinates are rejected.
    """
    arr = np.asarray(p, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise ValueError(f"expected points of shape (n, 2), got {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("points must have finite coordinates")
    return arr


def point(x1: float, x2: float) -> np.ndarray:
    """Build a single point as a length-2 float array."""
    p = np.array([x1, x2], dtype=float)
    if not np.isfinite(p).all():
        raise ValueError("point coordinates must be finite")
    return p


@dataclass(frozen=True)
class RigidMotion:
    """Affine isometry p -> linear @ p + shift with orthogonal linear part."""

    linear: np.ndarray
    shift: np.ndarray

    def __post_init__(self):
        lin = np.asarray(self.linear, dtype=float).reshape(2, 2)
        sh = np.asarray(self.shift, dtype=float).reshape(2)
        if not (np.isfinite(lin).all() and np.isfinite(sh).all()):
            raise ValueError("rigid motion entries must be finite")
        err = np.abs(lin @ lin.T - np.eye(2)).max()
        if err > MOTION_TOL:
            raise ValueError(f"linear part is not orthogonal (defect {err:.3e})")
        lin.setflags(write=False)
        sh.setflags(write=False)
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "shift", sh)

    @property
    def is_reflection(self) -> bool:
        return float(np.linalg.det(self.linear)) < 0.0

    def apply(self, p) -> np.ndarray:
        """Apply the motion to a point (2,) or a batch (n, 2)."""
        arr = np.asarray(p, dtype=float)
        if arr.ndim == 1:
            return self.linear @ arr + self.shift
        return arr @ self.linear.T + self.shift

    def invert(self) -> "RigidMotion":
        """Return the inverse motion."""
        lt = self.linear.T.copy()
        return RigidMotion(lt, -(lt @ self.shift))


def identity_motion() -> RigidMotion:
    return RigidMotion(np.eye(2), np.zeros(2))


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon with vertices in counterclockwise order."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 3:
            raise ValueError("polygon needs an (n>=3, 2) vertex array")
        if not np.isfinite(v).all():
            raise ValueError("polygon vertices must be finite")
        tang = np.roll(v, -1, axis=0) - v
        lens = np.hypot(tang[:, 0], tang[:, 1])
        scale = float(np.abs(v).max()) or 1.0
        if lens.min() <= 1e-14 * scale:
            raise ValueError("polygon has a degenerate edge")
        nxt = np.roll(tang, -1, axis=0)
        cross = tang[:, 0] * nxt[:, 1] - tang[:, 1] * nxt[:, 0]
        if not (cross > 1e-14 * scale * scale).all():
            raise ValueError("vertices must be strictly convex in CCW order")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        # cached edge frame: starts, unit tangents, edge lengths
        tang_unit = tang / lens[:, None]
        tang_unit.setflags(write=False)
        lens.setflags(write=False)
        object.__setattr__(self, "_tangents", tang_unit)
        object.__setattr__(self, "_lengths", lens)

    @classmethod
    def from_points(cls, pts) -> "ConvexPolygon":
        """Build a polygon, reversing the vertex order if it is clockwise."""
        v = np.asarray(pts, dtype=float)
        area2 = np.sum(v[:, 0] * np.roll(v[:, 1], -1) - np.roll(v[:, 0], -1) * v[:, 1])
        if area2 < 0:
            v = v[::-1]
        return cls(v)

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]

    @property
    def area(self) -> float:
        v = self.vertices
        return 0.5 * float(
            np.sum(v[:, 0] * np.roll(v[:, 1], -1) - np.roll(v[:, 0], -1) * v[:, 1])
        )

    @property
    def bounding_box(self) -> tuple[float, float, float, float]:
        """(x_min, x_max, y_min, y_max)."""
        v = self.vertices
        return (
            float(v[:, 0].min()),
            float(v[:, 0].max()),
            float(v[:, 1].min()),
            float(v[:, 1].max()),
        )

    def signed_distance(self, points) -> np.ndarray:
        """Signed distance to the boundary, positive inside, vectorized."""
        p = as_points(points)
        rel = p[:, None, :] - self.vertices[None, :, :]
        t = self._tangents
        # inward distance to each edge line; min over edges
        d = t[None, :, 0] * rel[:, :, 1] - t[None, :, 1] * rel[:, :, 0]
        return d.min(axis=1)

    def classify(self, points, tol: float = BOUNDARY_TOL) -> np.ndarray:
        """Classify points as INSIDE / BOUNDARY / OUTSIDE within tol."""
        sd = self.signed_distance(points)
        out = np.where(sd > tol, INSIDE, np.where(sd < -tol, OUTSIDE, BOUNDARY))
        return out

    def boundary_samples(self, n_per_edge: int) -> np.ndarray:
        """Uniform samples along each edge, each vertex included exactly once.

        Parameters
        ----------
        n_per_edge : int
            Number of uniform parameter values per edge, at least 2.  The end
            vertex of each edge is omitted because it starts the next edge, so
            a polygon with V vertices yields V * (n_per_edge - 1) points.
        """
        if n_per_edge < 2:
            raise ValueError("n_per_edge must be at least 2")
        lam = np.arange(n_per_edge - 1) / (n_per_edge - 1)
        v = self.vertices
        nxt = np.roll(v, -1, axis=0)
        pts = v[:, None, :] * (1 - lam)[None, :, None] + nxt[:, None, :] * lam[None, :, None]
        return pts.reshape(-1, 2)

    def is_axis_rectangle(self, tol: float = 1e-12) -> bool:
        """True if the polygon is an axis-aligned rectangle."""
        if self.n_vertices != 4:
            return False
        t = self._tangents
        return bool(np.all(np.minimum(np.abs(t[:, 0]), np.abs(t[:, 1])) <= tol))


def contains(poly: ConvexPolygon, p, tol: float = BOUNDARY_TOL) -> str:
    """Classify a single point against a polygon: inside, boundary or outside."""
    return str(poly.classify(as_points(p), tol)[0])


def axis_rectangle(x0: float, x1: float, y0: float, y1: float) -> ConvexPolygon:
    """Axis-aligned rectangle (x0, x1) x (y0, y1) as a CCW polygon."""
    if not (x1 > x0 and y1 > y0):
        raise ValueError("rectangle bounds must satisfy x1 > x0 and y1 > y0")
    return ConvexPolygon(np.array([[x0, y0], [x1, y0], [x1, y1], [x0, y1]]))


def motion_image(poly: ConvexPolygon, motion: RigidMotion) -> ConvexPolygon:
    """Image of a polygon under a rigid motion, reoriented CCW if reflected."""
    return ConvexPolygon.from_points(motion.apply(poly.vertices))


# ---------------------------------------------------------------------------
# concrete folding geometry
# ---------------------------------------------------------------------------

#: legs of the right triangle: short leg 1/sqrt(3) on the x axis, long leg 1 on y
TRIANGLE_LEG_X = 1.0 / SQRT3
TRIANGLE_LEG_Y = 1.0


def reference_triangle() -> ConvexPolygon:
    """The 30-60-90 triangle with vertices (0,0), (1/sqrt(3),0), (0,1)."""
    return ConvexPolygon(np.array([[0.0, 0.0], [TRIANGLE_LEG_X, 0.0], [0.0, 1.0]]))


def target_rectangle() -> ConvexPolygon:
    """The rectangle (0, sqrt(3)) x (0, 1) covered by six triangle images."""
    return axis_rectangle(0.0, SQRT3, 0.0, 1.0)


def folding_motions() -> tuple[RigidMotion, ...]:
    """The six rigid motions sending the reference triangle onto the six
    congruent tiles of the target rectangle.

    With leg vectors u1 = (1/sqrt(3), 0) and u2 = (0, 1), the images are: the
    triangle itself; its mirror across the hypotenuse; a 60 degree rotation
    about (0, 1); a 240 degree rotation about (1/sqrt(3), 0) moved to the
    bottom edge; a glide-type reflection into the upper-middle tile; and the
    180 degree rotation into the far corner.  Every motion fixes the shared
    interior vertex at the rectangle center (sqrt(3)/2, 1/2) as the image of
    the right-angle corner.
    """
    c, s = math.cos(math.pi / 3.0), math.sin(math.pi / 3.0)
    rot = np.array([[c, -s], [s, c]])  # CCW rotation by 60 degrees
    mirror_y = np.diag([1.0, -1.0])
    rot_mir = rot @ mirror_y
    u1 = np.array([TRIANGLE_LEG_X, 0.0])
    u2 = np.array([0.0, 1.0])
    return (
        identity_motion(),
        RigidMotion(-rot_mir, u2 + rot_mir @ u2),
        RigidMotion(rot, u2 - rot @ u2),
        RigidMotion(-rot, 3 * u1 + rot @ u2),
        RigidMotion(rot_mir, 3 * u1 - rot_mir @ u2),
        RigidMotion(-np.eye(2), 3 * u1 + u2),
    )


#: sign pattern making the six-motion folding admissible
FOLD_SIGNS = (1, -1, 1, 1, -1, 1)
