import itertools

import numpy as np
import pytest

from tilewave.geometry import axis_rectangle, reference_triangle
from tilewave.tiling import (
    PointFunction,
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

SQRT3 = np.sqrt(3.0)


# -- Monte Carlo validation --------------------------------------------------


def test_validate_triangle_rectangle(tiling):
    report = validate_tiling(tiling, n_samples=20_000, seed=1)
    assert report.passed
    assert report.coverage_fraction == 1.0
    assert report.max_overlap_count <= 1
    assert report.uncovered.shape[0] == 0


def test_validate_square_quadrant():
    report = validate_tiling(square_quadrant_tiling(), n_samples=20_000, seed=1)
    assert report.passed


def test_validate_half_rectangle():
    report = validate_tiling(half_rectangle_tiling(), n_samples=20_000, seed=1)
    assert report.passed


def test_validate_displaced_fails():
    report = validate_tiling(displaced_triangle_tiling(), n_samples=20_000, seed=1)
    assert not report.passed
    assert report.coverage_fraction < 0.6
    assert report.uncovered.shape[0] > 0


def test_validate_rejects_tiny_sample_count(tiling):
    with pytest.raises(ValueError):
        validate_tiling(tiling, n_samples=10)


def test_validate_is_deterministic(tiling):
    a = validate_tiling(tiling, n_samples=5_000, seed=7)
    b = validate_tiling(tiling, n_samples=5_000, seed=7)
    assert a.coverage_fraction == b.coverage_fraction
    assert a.max_overlap_count == b.max_overlap_count


# -- prolongation and folding ------------------------------------------------


def _bump(points):
    # smooth, vanishes nowhere in particular; fine for operator algebra tests
    return np.sin(points[:, 0] + 0.3) * np.cos(points[:, 1] - 0.2) + 0.5


def test_prolong_values_follow_motions(tiling):
    u = PointFunction(_bump, tiling.tile)
    pu = prolong(u, tiling)
    rng = np.random.default_rng(5)
    pts = rng.uniform((0.02, 0.02), (0.3, 0.6), size=(40, 2))
    inside = tiling.tile.signed_distance(pts) > 1e-6
    pts = pts[inside]
    for h, motion in enumerate(tiling.motions):
        expected = tiling.signs[h] * u(pts)
        got = pu(motion.apply(pts))
        assert np.abs(got - expected).max() < 1e-12


def test_fold_of_prolong_divides_by_tile_count(tiling):
    u = PointFunction(_bump, tiling.tile)
    fu = fold(prolong(u, tiling), tiling)
    rng = np.random.default_rng(6)
    pts = rng.uniform((0.0, 0.0), (1.0 / SQRT3, 1.0), size=(600, 2))
    pts = pts[tiling.tile.signed_distance(pts) > 1e-6]
    assert len(pts) >= 100
    assert np.abs(fu(pts) - u(pts) / tiling.n_tiles).max() < 1e-12


def test_prolong_rejects_points_outside_target(tiling):
    pu = prolong(PointFunction(_bump, tiling.tile), tiling)
    with pytest.raises(ValueError):
        pu(np.array([[2.5, 0.5]]))


def test_prolong_square_quadrant():
    tiling = square_quadrant_tiling()
    u = PointFunction(lambda p: np.sin(p[:, 0]) * np.sin(p[:, 1]), tiling.tile)
    pu = prolong(u, tiling)
    # sin extends oddly through the reflections: prolongation equals
    # sign * sin on each quadrant, which is sin(x/1)... checked pointwise
    pts = np.array([[0.4, 1.1], [2 * np.pi - 0.4, 1.1], [0.4, 2 * np.pi - 1.1]])
    base = np.sin(0.4) * np.sin(1.1)
    vals = pu(pts)
    assert vals[0] == pytest.approx(base, rel=1e-13)
    assert vals[1] == pytest.approx(-base, rel=1e-13)
    assert vals[2] == pytest.approx(-base, rel=1e-13)


# -- sign admissibility ------------------------------------------------------


def test_boundary_cancellation_accepts_correct_signs(tiling):
    assert boundary_cancellation_check(tiling)


def test_boundary_cancellation_rejects_wrong_signs(tiling):
    assert not boundary_cancellation_check(tiling, signs=(1, 1, 1, 1, 1, 1))
    assert not boundary_cancellation_check(tiling, signs=(1, -1, 1, 1, -1, -1))


def test_find_signs_triangle(tiling):
    assert find_admissible_signs(tiling) == [
        (1, -1, 1, 1, -1, 1),
        (-1, 1, -1, -1, 1, -1),
    ]


def test_find_signs_square():
    assert find_admissible_signs(square_quadrant_tiling()) == [
        (1, -1, -1, 1),
        (-1, 1, 1, -1),
    ]


def test_find_signs_half_rectangle_empty():
    assert find_admissible_signs(half_rectangle_tiling()) == []


def test_functional_admissibility(tiling):
    assert functional_admissibility_check(tiling)
    assert not functional_admissibility_check(tiling, signs=(1, 1, 1, 1, 1, 1))


def test_functional_admissibility_square():
    assert functional_admissibility_check(square_quadrant_tiling())


def test_cancellation_check_is_sign_symmetric(tiling):
    # flipping every sign flips every fold value, so the verdict is unchanged
    rng = np.random.default_rng(11)
    for t in (tiling, square_quadrant_tiling(), half_rectangle_tiling()):
        for _ in range(4):
            signs = tuple(int(s) for s in rng.choice([-1, 1], size=t.n_tiles))
            flipped = tuple(-s for s in signs)
            assert boundary_cancellation_check(t, signs=signs) == (
                boundary_cancellation_check(t, signs=flipped)
            )


def test_structural_and_functional_checks_agree(tiling):
    # the cluster-cancellation test and the fold-of-smooth-functions test
    # reach the same verdict across the preset families
    rng = np.random.default_rng(13)
    for t in (tiling, square_quadrant_tiling(), half_rectangle_tiling()):
        if t.n_tiles <= 4:
            candidates = list(itertools.product((1, -1), repeat=t.n_tiles))
        else:
            candidates = find_admissible_signs(t) + [
                tuple(int(s) for s in rng.choice([-1, 1], size=t.n_tiles))
                for _ in range(10)
            ]
        for signs in candidates:
            structural = boundary_cancellation_check(t, signs=signs)
            functional = functional_admissibility_check(
                t, signs=signs, n_test_functions=8
            )
            assert structural == functional, (t.name, signs)


# -- pullback regions --------------------------------------------------------


def test_pullback_counts_left_half(tiling):
    region = axis_rectangle(0.0, SQRT3 / 2.0, 0.0, 1.0)
    pb = pullback_region(region, tiling)
    rng = np.random.default_rng(8)
    pts = rng.uniform((0.0, 0.0), (1.0 / SQRT3, 1.0), size=(4000, 2))
    pts = pts[tiling.tile.signed_distance(pts) > 1e-9]
    counts = pb.count(pts)
    # the left half pulls back to the whole tile with multiplicity three
    assert counts.min() == 3
    assert counts.max() == 3
    assert pb.contains(pts).all()


def test_pullback_full_target_counts_all_motions(tiling):
    pb = pullback_region(tiling.target, tiling)
    pts = np.array([[0.2, 0.3], [0.1, 0.7]])
    assert (pb.count(pts) == tiling.n_tiles).all()


def test_pullback_small_corner_region(tiling):
    # a region inside the identity image only: pullback count is 1 there
    region = axis_rectangle(0.01, 0.05, 0.01, 0.05)
    pb = pullback_region(region, tiling)
    assert (pb.count(np.array([[0.02, 0.02]])) == 1).all()
    assert (pb.count(np.array([[0.3, 0.4]])) == 0).all()


def test_pullback_is_monotone_in_the_region(tiling):
    small = axis_rectangle(0.2, 0.7, 0.1, 0.8)
    large = axis_rectangle(0.1, 1.2, 0.05, 0.9)
    pb_small = pullback_region(small, tiling)
    pb_large = pullback_region(large, tiling)
    rng = np.random.default_rng(12)
    pts = rng.uniform((0.0, 0.0), (1.0 / SQRT3, 1.0), size=(3000, 2))
    pts = pts[tiling.tile.signed_distance(pts) > 1e-9]
    assert np.all(pb_small.count(pts) <= pb_large.count(pts))
    assert np.all(pb_small.contains(pts) <= pb_large.contains(pts))


# -- serialization -----------------------------------------------------------


def test_tiling_roundtrip(tmp_path, tiling):
    path = tmp_path / "t.txt"
    save_tiling(tiling, path)
    back = load_tiling(path)
    assert back.name == tiling.name
    assert back.signs == tiling.signs
    assert tiling_digest(back) == tiling_digest(tiling)
    for a, b in zip(back.motions, tiling.motions):
        assert np.abs(a.linear - b.linear).max() < 1e-14
        assert np.abs(a.shift - b.shift).max() < 1e-14


def test_digest_distinguishes_tilings(tiling):
    digests = {
        tiling_digest(tiling),
        tiling_digest(square_quadrant_tiling()),
        tiling_digest(half_rectangle_tiling()),
        tiling_digest(displaced_triangle_tiling()),
    }
    assert len(digests) == 4


def test_digest_ignores_name(tiling):
    import dataclasses

    renamed = dataclasses.replace(tiling, name="something-else")
    assert tiling_digest(renamed) == tiling_digest(tiling)


def test_load_rejects_malformed(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("tile = 0,0; 1,0; 0,1\n")
    with pytest.raises(ValueError):
        load_tiling(path)
