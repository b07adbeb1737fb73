"""Dirichlet Laplacian eigenbases for the rectangle (0, sqrt(3)) x (0, 1) and,
by sign-twisted folding, for the 30-60-90 triangle it is tiled by.

Rectangle modes are the separable sines
    e_(k1,k2)(x) = sin(pi k1 x1 / sqrt(3)) * sin(pi k2 x2),
with eigenvalue (pi^2 / 3) * (k1^2 + 3 k2^2).  Folding each mode through the
six-motion tiling produces either zero or a Dirichlet eigenfunction of the
triangle with the same eigenvalue; the survivors, deduplicated within
degenerate eigenspaces and normalized in L^2, form the triangle basis.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import kernels
from .geometry import SQRT3, ConvexPolygon, reference_triangle, target_rectangle
from .tiling import Tiling, tiling_digest, triangle_rectangle_tiling

# frequency steps of the separable sine modes on (0, sqrt(3)) x (0, 1)
A1 = np.pi / SQRT3
A2 = np.pi


def rect_eigenvalue(k1: int, k2: int) -> float:
    """Dirichlet eigenvalue of mode (k1, k2) on the rectangle.

    The integer combination is formed first so that degenerate modes get
    bitwise-identical floats, which keeps eigenvalue sorting deterministic.
    """
    return (np.pi**2 / 3.0) * float(k1 * k1 + 3 * k2 * k2)


def rect_eigenfunction(points, k1: int, k2: int) -> np.ndarray:
    """Unnormalized separable sine mode on the rectangle."""
    vals = kernels.rect_modes(
        np.asarray(points, dtype=float).reshape(-1, 2),
        np.array([float(k1)]),
        np.array([float(k2)]),
        A1,
        A2,
    )
    return vals[:, 0]


def triangle_eigenfunction_raw(points, k1: int, k2: int, tiling: Optional[Tiling] = None) -> np.ndarray:
    """Sign-twisted fold of a rectangle mode, before normalization.

    e(x) = sum_h d_h e_(k1,k2)(K_h x).  The sine extends entirely, so the
    result is defined for every point, not only inside the triangle; it
    vanishes identically unless the mode survives the folding.
    """
    tiling = tiling if tiling is not None else triangle_rectangle_tiling()
    lin, sh = tiling.motion_arrays()
    signs = np.array(tiling.require_signs(), dtype=float)
    vals = kernels.folded_modes(
        np.asarray(points, dtype=float).reshape(-1, 2),
        lin,
        sh,
        signs,
        np.array([float(k1)]),
        np.array([float(k2)]),
        A1,
        A2,
    )
    return vals[:, 0]


@dataclass(frozen=True)
class EigenPair:
    """One basis mode: rectangle index, eigenvalue, normalization, origin."""

    k1: int
    k2: int
    eigenvalue: float
    norm_factor: float
    provenance: str = "analytic"


@dataclass(frozen=True)
class EigenBasis:
    """An ordered, L^2-normalized Dirichlet eigenbasis on a polygon.

    ``kind`` is "rectangle" for separable sine modes or "triangle" for folded
    modes; triangle bases carry the tiling used to fold.  ``evaluate`` returns
    the (n_points, n_modes) matrix of mode values.
    """

    domain: ConvexPolygon
    pairs: tuple[EigenPair, ...]
    kind: str
    tiling: Optional[Tiling] = None
    dropped_zero: tuple[tuple[int, int], ...] = ()
    dropped_duplicate: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.kind not in ("rectangle", "triangle"):
            raise ValueError(f"unknown basis kind {self.kind!r}")
        if self.kind == "triangle" and self.tiling is None:
            raise ValueError("a triangle basis needs its folding tiling")
        if not self.pairs:
            raise ValueError("a basis needs at least one mode")
        object.__setattr__(self, "pairs", tuple(self.pairs))
        object.__setattr__(
            self, "_k1", np.array([p.k1 for p in self.pairs], dtype=float)
        )
        object.__setattr__(
            self, "_k2", np.array([p.k2 for p in self.pairs], dtype=float)
        )
        object.__setattr__(
            self, "_norm", np.array([p.norm_factor for p in self.pairs])
        )

    @property
    def n_modes(self) -> int:
        return len(self.pairs)

    def eigenvalues(self) -> np.ndarray:
        return np.array([p.eigenvalue for p in self.pairs])

    def mode_indices(self) -> list[tuple[int, int]]:
        return [(p.k1, p.k2) for p in self.pairs]

    def evaluate(self, points) -> np.ndarray:
        p = np.asarray(points, dtype=float).reshape(-1, 2)
        if self.kind == "rectangle":
            vals = kernels.rect_modes(p, self._k1, self._k2, A1, A2)
        else:
            lin, sh = self.tiling.motion_arrays()
            signs = np.array(self.tiling.require_signs(), dtype=float)
            vals = kernels.folded_modes(p, lin, sh, signs, self._k1, self._k2, A1, A2)
        return vals * self._norm

    def with_domain(self, domain: ConvexPolygon) -> "EigenBasis":
        """The same modes viewed on another polygon (folded modes are entire,
        so a triangle basis can be read on the rectangle it prolongs to)."""
        return EigenBasis(
            domain=domain,
            pairs=self.pairs,
            kind=self.kind,
            tiling=self.tiling,
            dropped_zero=self.dropped_zero,
            dropped_duplicate=self.dropped_duplicate,
        )


def _mode_order(max_k: tuple[int, int]) -> list[tuple[int, int]]:
    """All index pairs up to max_k, sorted by (eigenvalue, k1, k2)."""
    cand = [
        (rect_eigenvalue(a, b), a, b)
        for a in range(1, max_k[0] + 1)
        for b in range(1, max_k[1] + 1)
    ]
    cand.sort()
    return [(a, b) for _, a, b in cand]


def build_basis(
    domain_kind: str,
    max_k: tuple[int, int] = (8, 8),
    quad_order: int = 24,
    tiling: Optional[Tiling] = None,
    zero_tol: float = 1e-8,
    dup_tol: float = 1e-8,
) -> EigenBasis:
    """Build an eigenbasis on the rectangle or the triangle.

    Rectangle modes are normalized in closed form.  Triangle modes are the
    folded survivors: modes whose fold has L^2 norm below
    ``zero_tol * max_norm`` are dropped, and within a degenerate eigenvalue
    class a mode whose normalized inner product with an earlier survivor
    exceeds ``1 - dup_tol`` in absolute value is dropped as a duplicate.
    Norms and inner products use a collapsed tensor quadrature of the given
    order on the triangle.
    """
    from .observability import polygon_quadrature

    order = _mode_order(max_k)
    if domain_kind == "rectangle":
        norm = 1.0 / np.sqrt(SQRT3 / 4.0)  # sin-product L^2 norm on the rectangle
        pairs = tuple(
            EigenPair(a, b, rect_eigenvalue(a, b), norm) for a, b in order
        )
        return EigenBasis(domain=target_rectangle(), pairs=pairs, kind="rectangle")
    if domain_kind != "triangle":
        raise ValueError(f"unknown domain kind {domain_kind!r}")

    tiling = tiling if tiling is not None else triangle_rectangle_tiling()
    tri = reference_triangle()
    quad = polygon_quadrature(tri, quad_order)
    lin, sh = tiling.motion_arrays()
    signs = np.array(tiling.require_signs(), dtype=float)
    k1 = np.array([a for a, _ in order], dtype=float)
    k2 = np.array([b for _, b in order], dtype=float)
    vals = kernels.folded_modes(quad.points, lin, sh, signs, k1, k2, A1, A2)
    norms_sq = quad.weights @ vals**2
    # floor the reference scale at sqrt(area): a box whose folds all vanish
    # must drop everything rather than normalize quadrature noise
    max_norm = max(float(np.sqrt(norms_sq.max())), float(np.sqrt(tri.area)))

    kept: list[EigenPair] = []
    kept_cols: list[np.ndarray] = []
    dropped_zero: list[tuple[int, int]] = []
    dropped_duplicate: list[tuple[int, int]] = []
    for j, (a, b) in enumerate(order):
        nrm = float(np.sqrt(norms_sq[j]))
        if nrm <= zero_tol * max_norm:
            dropped_zero.append((a, b))
            continue
        col = vals[:, j] / nrm
        lam = rect_eigenvalue(a, b)
        duplicate = False
        for pair, other in zip(kept, kept_cols):
            if pair.eigenvalue != lam:
                continue
            if abs(quad.weights @ (col * other)) > 1.0 - dup_tol:
                duplicate = True
                break
        if duplicate:
            dropped_duplicate.append((a, b))
            continue
        kept.append(EigenPair(a, b, lam, 1.0 / nrm, provenance="folded"))
        kept_cols.append(col)
    if not kept:
        raise ValueError("no folded mode survived; enlarge max_k")
    return EigenBasis(
        domain=tri,
        pairs=tuple(kept),
        kind="triangle",
        tiling=tiling,
        dropped_zero=tuple(dropped_zero),
        dropped_duplicate=tuple(dropped_duplicate),
    )


def coefficients(f, basis: EigenBasis, quad_order: int = 24) -> np.ndarray:
    """Inner products of a function with every basis mode on the basis domain."""
    from .observability import polygon_quadrature

    quad = polygon_quadrature(basis.domain, quad_order)
    fv = np.asarray(f(quad.points), dtype=float).reshape(-1)
    return (quad.weights * fv) @ basis.evaluate(quad.points)


# ---------------------------------------------------------------------------
# basis serialization
# ---------------------------------------------------------------------------


def basis_cache_key(
    domain_kind: str,
    max_k: tuple[int, int],
    quad_order: int,
    zero_tol: float,
    dup_tol: float,
    tiling: Optional[Tiling],
) -> str:
    """Digest identifying a basis build, for cache naming and verification."""
    parts = [
        f"kind={domain_kind}",
        f"max_k={max_k[0]},{max_k[1]}",
        f"quad_order={quad_order}",
        f"zero_tol={zero_tol:.17g}",
        f"dup_tol={dup_tol:.17g}",
        f"tiling={tiling_digest(tiling) if tiling is not None else 'none'}",
    ]
    return hashlib.sha256("\n".join(parts).encode()).hexdigest()


def save_basis(basis: EigenBasis, path, cache_key: str = "") -> None:
    lines = [
        "# tilewave basis v1",
        f"kind = {basis.kind}",
        f"cache_key = {cache_key}",
        f"tiling_digest = {tiling_digest(basis.tiling) if basis.tiling is not None else 'none'}",
        f"n_modes = {basis.n_modes}",
        "dropped_zero = " + ";".join(f"{a},{b}" for a, b in basis.dropped_zero),
        "dropped_duplicate = "
        + ";".join(f"{a},{b}" for a, b in basis.dropped_duplicate),
    ]
    for p in basis.pairs:
        lines.append(
            f"mode = {p.k1},{p.k2},{p.eigenvalue:.17g},{p.norm_factor:.17g},{p.provenance}"
        )
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_basis(path, tiling: Optional[Tiling] = None, cache_key: str = "") -> EigenBasis:
    """Load a saved basis; verifies the stored tiling digest and cache key."""
    kind = None
    stored_key = ""
    stored_digest = "none"
    pairs: list[EigenPair] = []
    dropped_zero: tuple = ()
    dropped_duplicate: tuple = ()

    def parse_drops(text: str) -> tuple:
        if not text:
            return ()
        return tuple(tuple(int(v) for v in item.split(",")) for item in text.split(";"))

    with open(path) as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, _, value = line.partition("=")
            key, value = key.strip(), value.strip()
            if key == "kind":
                kind = value
            elif key == "cache_key":
                stored_key = value
            elif key == "tiling_digest":
                stored_digest = value
            elif key == "dropped_zero":
                dropped_zero = parse_drops(value)
            elif key == "dropped_duplicate":
                dropped_duplicate = parse_drops(value)
            elif key == "mode":
                f1, f2, lam, nf, prov = value.split(",")
                pairs.append(EigenPair(int(f1), int(f2), float(lam), float(nf), prov))
    if kind is None or not pairs:
        raise ValueError(f"{path}: not a basis file")
    if cache_key and stored_key and cache_key != stored_key:
        raise ValueError(f"{path}: cache key mismatch")
    if kind == "triangle":
        tiling = tiling if tiling is not None else triangle_rectangle_tiling()
        if stored_digest != "none" and stored_digest != tiling_digest(tiling):
            raise ValueError(f"{path}: stored tiling digest does not match")
        domain = reference_triangle()
    else:
        tiling = None
        domain = target_rectangle()
    return EigenBasis(
        domain=domain,
        pairs=tuple(pairs),
        kind=kind,
        tiling=tiling,
        dropped_zero=dropped_zero,
        dropped_duplicate=dropped_duplicate,
    )
