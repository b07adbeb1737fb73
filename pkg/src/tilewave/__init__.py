"""tilewave: spectral tiling, folding, and wave observability toolkit.

The package covers one chain of machinery: a convex tile carried onto a
larger domain by finitely many rigid motions, sign-twisted prolongation and
folding operators between the two, the Dirichlet eigenbasis the folding
produces on the tile, spectral wave solutions on either domain, and internal
observability energies whose constants transfer exactly across the tiling.

The flagship instance is the 30-60-90 triangle with legs 1/sqrt(3) and 1,
six copies of which tile the rectangle (0, sqrt(3)) x (0, 1).
"""

from .geometry import (
    FOLD_SIGNS,
    ConvexPolygon,
    RigidMotion,
    axis_rectangle,
    contains,
    folding_motions,
    identity_motion,
    motion_image,
    point,
    reference_triangle,
    target_rectangle,
)
from .kernels import BACKEND
from .observability import (
    ConstantEstimate,
    ObservationSetup,
    QuadratureRule,
    energy_form,
    estimate_constants,
    horizon_sweep,
    observed_energy,
    polygon_quadrature,
    rect_quadrature,
    region_quadrature,
    spatial_gram,
    subdivided_triangle_quadrature,
    time_integral,
    triangle_quadrature,
)
from .spectral import (
    EigenBasis,
    EigenPair,
    build_basis,
    coefficients,
    load_basis,
    rect_eigenfunction,
    rect_eigenvalue,
    save_basis,
    triangle_eigenfunction_raw,
)
from .tiling import (
    PointFunction,
    PullbackRegion,
    Tiling,
    TilingReport,
    boundary_cancellation_check,
    displaced_triangle_tiling,
    find_admissible_signs,
    fold,
    functional_admissibility_check,
    half_rectangle_tiling,
    load_tiling,
    prolong,
    pullback_region,
    save_tiling,
    square_quadrant_tiling,
    tiling_digest,
    triangle_rectangle_tiling,
    validate_tiling,
)
from .wavesim import (
    WaveState,
    evaluate_solution,
    evolve_coefficients,
    hminus1_norm_sq,
    l2_norm_sq,
    prolong_state,
    random_state,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "FOLD_SIGNS",
    "ConstantEstimate",
    "ConvexPolygon",
    "EigenBasis",
    "EigenPair",
    "ObservationSetup",
    "PointFunction",
    "PullbackRegion",
    "QuadratureRule",
    "RigidMotion",
    "Tiling",
    "TilingReport",
    "WaveState",
    "axis_rectangle",
    "boundary_cancellation_check",
    "build_basis",
    "coefficients",
    "contains",
    "displaced_triangle_tiling",
    "energy_form",
    "estimate_constants",
    "evaluate_solution",
    "evolve_coefficients",
    "find_admissible_signs",
    "fold",
    "folding_motions",
    "functional_admissibility_check",
    "half_rectangle_tiling",
    "hminus1_norm_sq",
    "horizon_sweep",
    "identity_motion",
    "l2_norm_sq",
    "load_basis",
    "load_tiling",
    "motion_image",
    "observed_energy",
    "point",
    "polygon_quadrature",
    "prolong",
    "prolong_state",
    "pullback_region",
    "random_state",
    "rect_eigenfunction",
    "rect_eigenvalue",
    "rect_quadrature",
    "reference_triangle",
    "region_quadrature",
    "save_basis",
    "save_tiling",
    "spatial_gram",
    "square_quadrant_tiling",
    "subdivided_triangle_quadrature",
    "target_rectangle",
    "tiling_digest",
    "time_integral",
    "triangle_eigenfunction_raw",
    "triangle_quadrature",
    "triangle_rectangle_tiling",
    "validate_tiling",
]
