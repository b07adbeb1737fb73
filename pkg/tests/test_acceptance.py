"""Acceptance checks for the full toolkit, one criterion per test.

Each test prints a single PASS/FAIL line (visible with ``pytest -s`` or in
captured output) and enforces the stated tolerance and, where given, a wall
clock budget.  The criteria cover: the Monte Carlo tiling check, sign-pattern
enumeration, eigenfunction quality, prolongation coefficients, pointwise
solution transfer, the energy identity, norm scaling, constant transfer, and
robustness of the numerics under refinement.
"""

import dataclasses
import time
from contextlib import contextmanager

import numpy as np
import pytest

from tilewave import (
    ObservationSetup,
    PointFunction,
    WaveState,
    axis_rectangle,
    build_basis,
    coefficients,
    estimate_constants,
    evaluate_solution,
    find_admissible_signs,
    fold,
    hminus1_norm_sq,
    l2_norm_sq,
    observed_energy,
    prolong,
    prolong_state,
    random_state,
    reference_triangle,
    spatial_gram,
    target_rectangle,
    triangle_rectangle_tiling,
    validate_tiling,
)
from tilewave.tiling import (
    displaced_triangle_tiling,
    half_rectangle_tiling,
    square_quadrant_tiling,
)

SQRT3 = np.sqrt(3.0)
LEFT_HALF = axis_rectangle(0.0, SQRT3 / 2.0, 0.0, 1.0)


@contextmanager
def criterion(label: str, budget: float | None = None):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"{label}: FAIL ({time.perf_counter() - t0:.2f}s)")
        raise
    elapsed = time.perf_counter() - t0
    print(f"{label}: PASS ({elapsed:.2f}s)")
    if budget is not None:
        assert elapsed < budget, f"{label} exceeded {budget}s budget ({elapsed:.2f}s)"


def _interior_tile_points(n, seed):
    rng = np.random.default_rng(seed)
    tri = reference_triangle()
    pts = rng.uniform((0.0, 0.0), (1.0 / SQRT3, 1.0), size=(10 * n, 2))
    return pts[tri.signed_distance(pts) > 1e-4][:n]


def test_criterion_1_monte_carlo_tiling():
    with criterion("criterion 1 (Monte Carlo tiling check)", budget=5.0):
        report = validate_tiling(triangle_rectangle_tiling(), n_samples=100_000, seed=0)
        assert report.coverage_fraction == 1.0
        assert report.max_overlap_count <= 1
        assert report.passed
        # the misplaced variant must be caught
        bad = validate_tiling(displaced_triangle_tiling(), n_samples=100_000, seed=0)
        assert not bad.passed


def test_criterion_2_sign_enumeration():
    with criterion("criterion 2 (admissible sign enumeration)", budget=5.0):
        assert find_admissible_signs(triangle_rectangle_tiling()) == [
            (1, -1, 1, 1, -1, 1),
            (-1, 1, -1, -1, 1, -1),
        ]
        assert find_admissible_signs(square_quadrant_tiling()) == [
            (1, -1, -1, 1),
            (-1, 1, 1, -1),
        ]
        assert find_admissible_signs(half_rectangle_tiling()) == []


def test_criterion_3_eigenfunction_quality():
    with criterion("criterion 3 (folded eigenfunction quality)", budget=60.0):
        tiling = triangle_rectangle_tiling()
        basis = build_basis("triangle", max_k=(6, 6), quad_order=24, tiling=tiling)
        tri = reference_triangle()
        interior = _interior_tile_points(300, seed=1)
        sup = np.abs(basis.evaluate(interior)).max()

        # boundary vanishing, relative to the interior sup
        bd = tri.boundary_samples(128)
        assert np.abs(basis.evaluate(bd)).max() < 1e-9 * sup

        # five-point finite differences confirm the eigenvalue equation
        step = 1e-4
        stencil_pts = _interior_tile_points(20, seed=2)
        gamma = basis.eigenvalues()
        ex, ey = np.array([step, 0.0]), np.array([0.0, step])
        lap = (
            basis.evaluate(stencil_pts + ex)
            + basis.evaluate(stencil_pts - ex)
            + basis.evaluate(stencil_pts + ey)
            + basis.evaluate(stencil_pts - ey)
            - 4.0 * basis.evaluate(stencil_pts)
        ) / step**2
        resid = np.abs(lap + gamma * basis.evaluate(stencil_pts))
        assert (resid < 1e-5 * gamma * max(sup, 1.0)).all()

        # orthonormality at the build quadrature order
        from tilewave.observability import polygon_quadrature

        quad = polygon_quadrature(tri, 24)
        vals = basis.evaluate(quad.points)
        gram = (vals * quad.weights[:, None]).T @ vals
        assert np.abs(gram - np.eye(basis.n_modes)).max() < 1e-7

        # equivariance under every tiling motion
        for h, motion in enumerate(tiling.motions):
            moved = basis.evaluate(motion.apply(interior))
            ref = tiling.signs[h] * basis.evaluate(interior)
            assert np.abs(moved - ref).max() < 1e-10 * max(sup, 1.0)


def test_criterion_4_prolongation_coefficients():
    with criterion("criterion 4 (prolongation coefficient transfer)"):
        tiling = triangle_rectangle_tiling()
        basis = build_basis("triangle", max_k=(6, 6), quad_order=24, tiling=tiling)
        basis5 = dataclasses.replace(basis, pairs=basis.pairs[:5])
        big = basis5.with_domain(target_rectangle())
        n = tiling.n_tiles
        for seed in range(10):
            rng = np.random.default_rng(seed)
            c = rng.standard_normal(5)
            u = PointFunction(lambda p: basis5.evaluate(p) @ c, tiling.tile)
            pu = prolong(u, tiling)
            inner = coefficients(pu, big, quad_order=32)
            expected = n * c
            err = np.abs(inner - expected).max() / np.abs(expected).max()
            assert err < 1e-8, f"seed {seed}: relative error {err:.3e}"


def test_criterion_5_solution_transfer():
    with criterion("criterion 5 (pointwise solution transfer)"):
        tiling = triangle_rectangle_tiling()
        basis = build_basis("triangle", max_k=(6, 6), quad_order=24, tiling=tiling)
        state = random_state(basis, seed=0)
        big = prolong_state(state)
        n = tiling.n_tiles
        rng = np.random.default_rng(3)
        pts = _interior_tile_points(100, seed=4)
        times = rng.uniform(0.0, 4.0, size=100)
        hs = rng.integers(0, n, size=100)
        scale = max(np.abs(basis.evaluate(pts)).max(), 1.0)
        for t, x, h in zip(times, pts, hs):
            u = evaluate_solution(state, t, x[None, :])[0]
            ubar = evaluate_solution(big, t, tiling.motions[h].apply(x)[None, :])[0]
            assert abs(ubar - n * tiling.signs[h] * u) < 1e-8 * n * scale

        # folding the prolonged solution returns the tile solution
        for t in (0.37, 2.6):
            v = PointFunction(lambda p: evaluate_solution(big, t, p), tiling.target)
            back = fold(v, tiling)
            u_ref = evaluate_solution(state, t, pts)
            assert np.abs(back(pts) - u_ref).max() < 1e-8 * scale


def test_criterion_6_energy_identity():
    with criterion("criterion 6 (tile/rectangle energy identity)", budget=120.0):
        tiling = triangle_rectangle_tiling()
        basis = build_basis("triangle", max_k=(12, 12), quad_order=48, tiling=tiling)
        basis25 = dataclasses.replace(basis, pairs=basis.pairs[:25])
        assert basis25.n_modes == 25
        state = random_state(basis25, seed=6)
        big = prolong_state(state)
        factor = tiling.n_tiles**2
        for horizon in (1.0, 4.0):
            rect_setup = ObservationSetup(
                region=(LEFT_HALF,), horizon=horizon, space_quad_order=40
            )
            e_rect = observed_energy(big, rect_setup)
            gaps = {}
            for level in (6, 7):
                tri_setup = ObservationSetup(
                    region=(LEFT_HALF,),
                    horizon=horizon,
                    pullback=tiling,
                    subdivision_level=level,
                )
                e_tri = observed_energy(state, tri_setup)
                gaps[level] = abs(e_rect - factor * e_tri) / abs(e_rect)
            assert gaps[6] < 1e-4, f"T={horizon}: gap {gaps[6]:.3e}"
            assert gaps[7] < gaps[6], f"T={horizon}: no refinement gain {gaps}"


def test_criterion_7_norm_scaling():
    with criterion("criterion 7 (prolongation norm scaling)"):
        tiling = triangle_rectangle_tiling()
        basis = build_basis("triangle", max_k=(6, 6), quad_order=24, tiling=tiling)
        big_basis = basis.with_domain(target_rectangle())
        n2 = tiling.n_tiles**2
        full_rect = ObservationSetup(
            region=(target_rectangle(),), horizon=1.0, space_quad_order=32
        )
        gram = spatial_gram(big_basis, full_rect)
        for seed in range(5):
            state = random_state(basis, seed=seed)
            big = prolong_state(state)
            # recover the prolonged coefficients from point values by
            # projecting the function against the rectangle-side modes
            u_fn = PointFunction(
                lambda p: evaluate_solution(big, 0.0, p), target_rectangle()
            )
            raw = coefficients(u_fn, big_basis, quad_order=32)
            extracted = np.linalg.solve(gram, raw)
            assert (
                np.abs(extracted - tiling.n_tiles * state.c).max()
                < 1e-8 * np.abs(state.c).max() * tiling.n_tiles
            )
            quad_norm_sq = float(extracted @ extracted)
            assert abs(quad_norm_sq - n2 * l2_norm_sq(state)) < 1e-8 * quad_norm_sq
            assert abs(l2_norm_sq(big) - quad_norm_sq) < 1e-8 * quad_norm_sq

            # same story for the velocity data in the weak norm: project the
            # prolonged velocity field and weight the modal energies by 1/gamma
            vel_fn = PointFunction(
                lambda p: evaluate_solution(
                    WaveState(big.basis, big.d, np.zeros_like(big.d)), 0.0, p
                ),
                target_rectangle(),
            )
            raw_vel = coefficients(vel_fn, big_basis, quad_order=32)
            extracted_vel = np.linalg.solve(gram, raw_vel)
            quad_weak_sq = float(
                extracted_vel @ (extracted_vel / big_basis.eigenvalues())
            )
            assert abs(quad_weak_sq - n2 * hminus1_norm_sq(state)) < 1e-8 * quad_weak_sq
            assert abs(hminus1_norm_sq(big) - quad_weak_sq) < 1e-8 * quad_weak_sq


def test_criterion_8_constant_transfer():
    with criterion("criterion 8 (observability constant transfer)"):
        tiling = triangle_rectangle_tiling()
        for box in ((4, 4), (6, 6)):
            basis = build_basis("triangle", max_k=box, quad_order=24, tiling=tiling)
            big = basis.with_domain(target_rectangle())
            tri_c1 = []
            rect_c1 = []
            for horizon in (1.0, 2.0, 4.0):
                tri_setup = ObservationSetup(
                    region=(LEFT_HALF,),
                    horizon=horizon,
                    pullback=tiling,
                    subdivision_level=6,
                )
                rect_setup = ObservationSetup(
                    region=(LEFT_HALF,), horizon=horizon, space_quad_order=32
                )
                est_tri = estimate_constants(basis, tri_setup)
                est_rect = estimate_constants(big, rect_setup)
                for a, b in ((est_tri.c1, est_rect.c1), (est_tri.c2, est_rect.c2)):
                    assert abs(a - b) <= 1e-4 * max(abs(b), 1e-300), (box, horizon, a, b)
                tri_c1.append(est_tri.c1)
                rect_c1.append(est_rect.c1)
            for series in (tri_c1, rect_c1):
                assert all(
                    later >= earlier - 1e-12
                    for earlier, later in zip(series, series[1:])
                ), (box, series)


def test_criterion_9_refinement_robustness():
    with criterion("criterion 9 (refinement robustness)"):
        tiling = triangle_rectangle_tiling()
        basis = build_basis("triangle", max_k=(6, 6), quad_order=24, tiling=tiling)
        state = random_state(basis, seed=11)
        big = prolong_state(state)

        # exact-region energies are stable under doubling the quadrature order
        for setup_state, region, domain_basis in (
            (big, LEFT_HALF, None),
            (state, reference_triangle(), None),
        ):
            coarse = observed_energy(
                setup_state,
                ObservationSetup(region=(region,), horizon=2.0, space_quad_order=24),
            )
            fine = observed_energy(
                setup_state,
                ObservationSetup(region=(region,), horizon=2.0, space_quad_order=48),
            )
            assert abs(coarse - fine) < 1e-6 * abs(fine), (coarse, fine)

        # pullback energies are stable under one extra subdivision level
        e5, e6 = (
            observed_energy(
                state,
                ObservationSetup(
                    region=(LEFT_HALF,),
                    horizon=2.0,
                    pullback=tiling,
                    subdivision_level=level,
                ),
            )
            for level in (5, 6)
        )
        assert abs(e5 - e6) < 1e-3 * abs(e6), (e5, e6)
