"""Command line interface and config-file plumbing.

Subcommands:
    check-tiling        Monte Carlo cover/overlap check plus sign admissibility
    find-signs          enumerate admissible sign patterns for a tiling
    build-basis         build (or load from cache) an eigenbasis and save it
    simulate            sample a spectral wave solution onto a grid (CSV)
    observe             observed energy and constants for one setup (CSV)
    estimate-constants  observability constants over one or more horizons (CSV)
    verify-equivalence  check the tile/target energy identity numerically

Config files are flat ``key = value`` lines; ``#`` comments and ``[section]``
headers are tolerated and ignored.  Unknown or duplicate keys are rejected
with their line number.  Exit codes: 0 success, 2 a verification failed,
3 bad configuration or arguments, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .geometry import (
    ConvexPolygon,
    axis_rectangle,
    motion_image,
    target_rectangle,
)
from .observability import (
    ObservationSetup,
    estimate_constants,
    horizon_sweep,
    observed_energy,
)
from .spectral import EigenBasis, basis_cache_key, build_basis, load_basis, save_basis
from .tiling import (
    Tiling,
    boundary_cancellation_check,
    displaced_triangle_tiling,
    find_admissible_signs,
    functional_admissibility_check,
    half_rectangle_tiling,
    load_tiling,
    square_quadrant_tiling,
    triangle_rectangle_tiling,
    validate_tiling,
)
from .wavesim import prolong_state, random_state

EXIT_OK = 0
EXIT_VERIFY = 2
EXIT_CONFIG = 3
EXIT_NUMERIC = 4

TILING_PRESETS = {
    "triangle-rectangle": triangle_rectangle_tiling,
    "square-quadrant": square_quadrant_tiling,
    "half-rectangle": half_rectangle_tiling,
    "displaced-triangle": displaced_triangle_tiling,
}


class ConfigError(Exception):
    """Bad config file or command arguments (exit code 3)."""


class NumericalError(Exception):
    """A computation failed or went out of tolerance unexpectedly (exit 4)."""


# ---------------------------------------------------------------------------
# config parsing
# ---------------------------------------------------------------------------


@dataclass
class RunConfig:
    domain: str = "triangle"
    tiling: str = "triangle-rectangle"
    max_k: tuple[int, int] = (8, 8)
    quad_order: int = 24
    zero_tol: float = 1e-8
    dup_tol: float = 1e-8
    region: str = "full"
    region_id: str = ""
    pullback: bool = False
    subdivision_level: int = 5
    horizon: float = 4.0
    horizons: tuple[float, ...] = ()
    seed: int = 0
    mode_limit: int = 0
    subspace: str = "full"
    t_samples: int = 9
    grid: int = 24
    tol: float = 1e-4
    check_constants: bool = False
    cache_dir: str = ""

    def __post_init__(self):
        if not self.region_id:
            self.region_id = self.region
        if not self.horizons:
            self.horizons = (self.horizon,)


def _conv_bool(text: str) -> bool:
    low = text.lower()
    if low in ("true", "yes", "on", "1"):
        return True
    if low in ("false", "no", "off", "0"):
        return False
    raise ValueError(f"expected a boolean, got {text!r}")


def _conv_int_pair(text: str) -> tuple[int, int]:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2:
        raise ValueError(f"expected two comma-separated integers, got {text!r}")
    return int(parts[0]), int(parts[1])


def _conv_floats(text: str) -> tuple[float, ...]:
    return tuple(float(p) for p in text.split(","))


_CONVERTERS = {
    "domain": str,
    "tiling": str,
    "max_k": _conv_int_pair,
    "quad_order": int,
    "zero_tol": float,
    "dup_tol": float,
    "region": str,
    "region_id": str,
    "pullback": _conv_bool,
    "subdivision_level": int,
    "horizon": float,
    "horizons": _conv_floats,
    "seed": int,
    "mode_limit": int,
    "subspace": str,
    "t_samples": int,
    "grid": int,
    "tol": float,
    "check_constants": _conv_bool,
    "cache_dir": str,
}


def _validate_config(cfg: RunConfig, where: str) -> RunConfig:
    if cfg.domain not in ("triangle", "rectangle"):
        raise ConfigError(f"{where}: domain must be 'triangle' or 'rectangle'")
    if cfg.tiling not in TILING_PRESETS:
        names = ", ".join(sorted(TILING_PRESETS))
        raise ConfigError(f"{where}: unknown tiling {cfg.tiling!r} (choose from {names})")
    if cfg.subspace not in ("full", "folded"):
        raise ConfigError(f"{where}: subspace must be 'full' or 'folded'")
    if min(cfg.max_k) < 1:
        raise ConfigError(f"{where}: max_k entries must be positive")
    if cfg.quad_order < 2:
        raise ConfigError(f"{where}: quad_order must be at least 2")
    if not cfg.horizon > 0 or any(not h > 0 for h in cfg.horizons):
        raise ConfigError(f"{where}: horizons must be positive")
    if not 0 <= cfg.subdivision_level <= 10:
        raise ConfigError(f"{where}: subdivision_level must be between 0 and 10")
    if cfg.t_samples < 2 or cfg.grid < 2:
        raise ConfigError(f"{where}: t_samples and grid must be at least 2")
    if cfg.mode_limit < 0 or cfg.seed < 0:
        raise ConfigError(f"{where}: mode_limit and seed must be nonnegative")
    if not cfg.tol > 0 or not cfg.zero_tol > 0 or not cfg.dup_tol > 0:
        raise ConfigError(f"{where}: tolerances must be positive")
    if cfg.pullback and cfg.domain != "triangle":
        raise ConfigError(f"{where}: pullback observation needs domain = triangle")
    if cfg.subspace == "folded" and cfg.domain != "rectangle":
        raise ConfigError(f"{where}: subspace = folded applies to domain = rectangle")
    return cfg


def parse_config(path) -> RunConfig:
    """Parse a flat key = value config file into a validated RunConfig."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    values = {}
    seen_lines: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        if line.startswith("[") and line.endswith("]"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key = value, got {line!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.split("#", 1)[0].strip()
        if key not in _CONVERTERS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in seen_lines:
            raise ConfigError(
                f"{path}:{lineno}: duplicate key {key!r} (first set on line {seen_lines[key]})"
            )
        seen_lines[key] = lineno
        try:
            values[key] = _CONVERTERS[key](value)
        except ValueError as exc:
            raise ConfigError(f"{path}:{lineno}: bad value for {key!r}: {exc}") from exc
    return _validate_config(RunConfig(**values), str(path))


def _load_tiling_for(cfg: RunConfig, tiling_file: Optional[str]) -> Tiling:
    if tiling_file:
        try:
            return load_tiling(tiling_file)
        except (OSError, ValueError) as exc:
            raise ConfigError(f"cannot load tiling file {tiling_file}: {exc}") from exc
    return TILING_PRESETS[cfg.tiling]()


# ---------------------------------------------------------------------------
# region grammar
# ---------------------------------------------------------------------------


def region_polygons(cfg: RunConfig, tiling: Tiling) -> tuple[ConvexPolygon, ...]:
    """Resolve the config region string to polygons.

    Grammar: ``full`` | ``left_half`` | ``rect:x0,x1,y0,y1`` |
    ``tile_image_<h>``.  Regions live on the tiling target for rectangle-side
    runs and for pullback observation; a plain triangle run takes ``full``
    (the tile itself) or an explicit ``rect:`` inside the tile.
    """
    target_side = cfg.domain == "rectangle" or cfg.pullback
    spec = cfg.region
    if spec == "full":
        return (tiling.target if target_side else tiling.tile,)
    if spec == "left_half":
        if not target_side:
            raise ConfigError("region 'left_half' lives on the rectangle side")
        x0, x1, y0, y1 = tiling.target.bounding_box
        return (axis_rectangle(x0, 0.5 * (x0 + x1), y0, y1),)
    if spec.startswith("rect:"):
        try:
            x0, x1, y0, y1 = (float(v) for v in spec[5:].split(","))
        except ValueError as exc:
            raise ConfigError(f"bad rect region {spec!r}: {exc}") from exc
        if not (x0 < x1 and y0 < y1):
            raise ConfigError(f"bad rect region {spec!r}: empty rectangle")
        return (axis_rectangle(x0, x1, y0, y1),)
    if spec.startswith("tile_image_"):
        if not target_side:
            raise ConfigError("tile_image regions live on the rectangle side")
        try:
            h = int(spec[len("tile_image_") :])
        except ValueError as exc:
            raise ConfigError(f"bad region {spec!r}") from exc
        if not 1 <= h <= tiling.n_tiles:
            raise ConfigError(f"region {spec!r}: motion index out of range")
        return (motion_image(tiling.tile, tiling.motions[h - 1]),)
    raise ConfigError(f"unknown region {spec!r}")


# ---------------------------------------------------------------------------
# basis construction with optional cache
# ---------------------------------------------------------------------------


def _truncate(basis: EigenBasis, limit: int) -> EigenBasis:
    if limit and limit < basis.n_modes:
        return dataclasses.replace(basis, pairs=basis.pairs[:limit])
    return basis


def make_basis(cfg: RunConfig, tiling: Tiling) -> EigenBasis:
    """Build the configured basis, honoring subspace, mode limit, and cache."""
    kind = "triangle" if (cfg.domain == "triangle" or cfg.subspace == "folded") else "rectangle"
    key = basis_cache_key(
        kind, cfg.max_k, cfg.quad_order, cfg.zero_tol, cfg.dup_tol,
        tiling if kind == "triangle" else None,
    )
    basis = None
    cache_path = None
    if cfg.cache_dir:
        cache_path = Path(cfg.cache_dir) / f"basis-{key[:16]}.txt"
        if cache_path.exists():
            basis = load_basis(cache_path, tiling=tiling, cache_key=key)
    if basis is None:
        basis = build_basis(
            kind,
            max_k=cfg.max_k,
            quad_order=cfg.quad_order,
            tiling=tiling if kind == "triangle" else None,
            zero_tol=cfg.zero_tol,
            dup_tol=cfg.dup_tol,
        )
        if cache_path is not None:
            cache_path.parent.mkdir(parents=True, exist_ok=True)
            save_basis(basis, cache_path, cache_key=key)
    if cfg.domain == "rectangle" and cfg.subspace == "folded":
        basis = basis.with_domain(target_rectangle())
    return _truncate(basis, cfg.mode_limit)


def make_setup(cfg: RunConfig, tiling: Tiling) -> ObservationSetup:
    return ObservationSetup(
        region=region_polygons(cfg, tiling),
        horizon=cfg.horizon,
        space_quad_order=cfg.quad_order,
        pullback=tiling if cfg.pullback else None,
        subdivision_level=cfg.subdivision_level,
    )


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _g17(x: float) -> str:
    return format(float(x), ".17g")


def _write_rows(path, header: list[str], rows: list[list[str]]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)


def _write_report(path, payload: dict) -> None:
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_check_tiling(args) -> int:
    cfg = parse_config(args.config) if args.config else RunConfig()
    if args.tiling:
        cfg.tiling = args.tiling
        _validate_config(cfg, "--tiling")
    tiling = _load_tiling_for(cfg, args.tiling_file)
    report = validate_tiling(tiling, n_samples=args.samples, seed=cfg.seed)
    lines = [
        f"tiling: {tiling.name or '(unnamed)'}",
        f"tiles: {tiling.n_tiles}",
        f"samples: {report.n_samples}",
        f"coverage: {report.coverage_fraction:.6f}",
        f"max overlap: {report.max_overlap_count}",
        f"geometry: {'pass' if report.passed else 'fail'}",
    ]
    ok = report.passed
    if tiling.signs is not None and report.passed:
        structural = boundary_cancellation_check(tiling)
        lines.append(f"sign cancellation: {'pass' if structural else 'fail'}")
        ok = ok and structural
        if tiling.target.is_axis_rectangle():
            functional = functional_admissibility_check(tiling, seed=cfg.seed)
            lines.append(f"functional check: {'pass' if functional else 'fail'}")
            ok = ok and functional
    lines.append(f"result: {'pass' if ok else 'fail'}")
    print("\n".join(lines))
    if args.report:
        _write_report(
            args.report,
            {
                "tiling": tiling.name,
                "n_tiles": tiling.n_tiles,
                "n_samples": report.n_samples,
                "coverage_fraction": report.coverage_fraction,
                "max_overlap_count": report.max_overlap_count,
                "passed": ok,
            },
        )
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_find_signs(args) -> int:
    cfg = parse_config(args.config) if args.config else RunConfig()
    if args.tiling:
        cfg.tiling = args.tiling
        _validate_config(cfg, "--tiling")
    tiling = _load_tiling_for(cfg, args.tiling_file)
    patterns = find_admissible_signs(tiling)
    print(f"tiling: {tiling.name or '(unnamed)'}")
    print(f"admissible patterns: {len(patterns)}")
    for pat in patterns:
        print(",".join(f"{s:+d}" for s in pat))
    return EXIT_OK if patterns else EXIT_VERIFY


def cmd_build_basis(args) -> int:
    cfg = parse_config(args.config) if args.config else RunConfig()
    if args.domain:
        cfg.domain = args.domain
        _validate_config(cfg, "--domain")
    tiling = _load_tiling_for(cfg, None)
    kind = "triangle" if cfg.domain == "triangle" else "rectangle"
    basis = make_basis(cfg, tiling)
    out = args.out or f"basis-{kind}-{cfg.max_k[0]}x{cfg.max_k[1]}-q{cfg.quad_order}.txt"
    key = basis_cache_key(
        kind, cfg.max_k, cfg.quad_order, cfg.zero_tol, cfg.dup_tol,
        tiling if kind == "triangle" else None,
    )
    save_basis(basis, out, cache_key=key)
    eigs = basis.eigenvalues()
    print(f"domain: {kind}")
    print(f"modes: {basis.n_modes}")
    print(f"dropped zero folds: {len(basis.dropped_zero)}")
    print(f"dropped duplicates: {len(basis.dropped_duplicate)}")
    print(f"eigenvalue range: {eigs[0]:.6f} .. {eigs[-1]:.6f}")
    print(f"written: {out}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    cfg = parse_config(args.config)
    tiling = _load_tiling_for(cfg, None)
    basis = make_basis(cfg, tiling)
    state = random_state(basis, seed=cfg.seed)
    times = np.linspace(0.0, cfg.horizon, cfg.t_samples)
    x0, x1, y0, y1 = basis.domain.bounding_box
    frac = (np.arange(cfg.grid) + 1.0) / (cfg.grid + 1.0)
    gx = x0 + (x1 - x0) * frac
    gy = y0 + (y1 - y0) * frac
    pts = np.stack(np.meshgrid(gx, gy, indexing="ij"), axis=-1).reshape(-1, 2)
    pts = pts[basis.domain.signed_distance(pts) > 0]
    vals = basis.evaluate(pts)
    rows = []
    from .wavesim import evolve_coefficients

    for t in times:
        pos, _ = evolve_coefficients(state, float(t))
        u = vals @ pos
        for p, uv in zip(pts, u):
            rows.append([_g17(t), _g17(p[0]), _g17(p[1]), _g17(uv)])
    _write_rows(args.out, ["t", "x1", "x2", "u"], rows)
    print(f"modes: {basis.n_modes}")
    print(f"samples: {len(rows)} ({cfg.t_samples} times x {pts.shape[0]} points)")
    print(f"written: {args.out}")
    return EXIT_OK


def cmd_observe(args) -> int:
    cfg = parse_config(args.config)
    tiling = _load_tiling_for(cfg, None)
    basis = make_basis(cfg, tiling)
    setup = make_setup(cfg, tiling)
    state = random_state(basis, seed=cfg.seed)
    energy = observed_energy(state, setup)
    est = estimate_constants(basis, setup)
    row = [
        cfg.domain,
        cfg.region_id,
        _g17(cfg.horizon),
        str(basis.n_modes),
        _g17(est.c1),
        _g17(est.c2),
        _g17(energy),
    ]
    if args.out:
        _write_rows(
            args.out,
            ["domain", "region_id", "T", "mode_count", "c1", "c2", "observed_energy"],
            [row],
        )
    print(f"domain: {cfg.domain}")
    print(f"region: {cfg.region_id}")
    print(f"modes: {basis.n_modes}")
    print(f"observed energy: {energy:.12g}")
    print(f"c1: {est.c1:.12g}")
    print(f"c2: {est.c2:.12g}")
    if args.report:
        _write_report(
            args.report,
            {
                "domain": cfg.domain,
                "region_id": cfg.region_id,
                "horizon": cfg.horizon,
                "mode_count": basis.n_modes,
                "observed_energy": energy,
                "c1": est.c1,
                "c2": est.c2,
            },
        )
    return EXIT_OK


def cmd_estimate_constants(args) -> int:
    cfg = parse_config(args.config)
    tiling = _load_tiling_for(cfg, None)
    basis = make_basis(cfg, tiling)
    setup = make_setup(cfg, tiling)
    estimates = horizon_sweep(basis, setup, cfg.horizons)
    rows = [
        [
            cfg.domain,
            cfg.region_id,
            _g17(est.horizon),
            str(est.n_modes),
            _g17(est.c1),
            _g17(est.c2),
            "",
        ]
        for est in estimates
    ]
    if args.out:
        _write_rows(
            args.out,
            ["domain", "region_id", "T", "mode_count", "c1", "c2", "observed_energy"],
            rows,
        )
    for est in estimates:
        print(f"T={est.horizon:g}  c1={est.c1:.12g}  c2={est.c2:.12g}")
    if args.report:
        _write_report(
            args.report,
            {
                "domain": cfg.domain,
                "region_id": cfg.region_id,
                "estimates": [dataclasses.asdict(est) for est in estimates],
            },
        )
    return EXIT_OK


def cmd_verify_equivalence(args) -> int:
    cfg = parse_config(args.config)
    if cfg.domain != "triangle":
        raise ConfigError("verify-equivalence starts from the triangle side")
    tiling = _load_tiling_for(cfg, None)
    tri_cfg = dataclasses.replace(cfg, pullback=True, region_id=cfg.region_id)
    if tri_cfg.region == "full":
        tri_cfg = dataclasses.replace(tri_cfg, region="left_half", region_id="left_half")
    basis = make_basis(tri_cfg, tiling)
    state = random_state(basis, seed=cfg.seed)

    tri_setup = make_setup(tri_cfg, tiling)
    tri_energy = observed_energy(state, tri_setup)

    rect_cfg = dataclasses.replace(tri_cfg, domain="rectangle", pullback=False)
    rect_setup = make_setup(rect_cfg, tiling)
    big = prolong_state(state)
    rect_energy = observed_energy(big, rect_setup)

    factor = tiling.n_tiles**2
    gap = abs(rect_energy - factor * tri_energy) / max(abs(rect_energy), 1e-300)
    ok = gap <= cfg.tol
    print(f"region: {tri_cfg.region_id}")
    print(f"modes: {basis.n_modes}")
    print(f"tile-side energy (count-weighted): {tri_energy:.12g}")
    print(f"rectangle-side energy: {rect_energy:.12g}")
    print(f"identity factor: {factor}")
    print(f"relative gap: {gap:.3e} (tolerance {cfg.tol:g})")
    results = {
        "region_id": tri_cfg.region_id,
        "mode_count": basis.n_modes,
        "tile_energy": tri_energy,
        "rectangle_energy": rect_energy,
        "factor": factor,
        "relative_gap": gap,
        "tolerance": cfg.tol,
    }
    if cfg.check_constants:
        tri_est = estimate_constants(basis, tri_setup)
        rect_est = estimate_constants(basis.with_domain(tiling.target), rect_setup)
        dc1 = abs(tri_est.c1 - rect_est.c1) / max(abs(rect_est.c1), 1e-300)
        dc2 = abs(tri_est.c2 - rect_est.c2) / max(abs(rect_est.c2), 1e-300)
        ok = ok and dc1 <= cfg.tol and dc2 <= cfg.tol
        print(f"constants (triangle):  c1={tri_est.c1:.12g}  c2={tri_est.c2:.12g}")
        print(f"constants (rectangle): c1={rect_est.c1:.12g}  c2={rect_est.c2:.12g}")
        print(f"constant gaps: {dc1:.3e}, {dc2:.3e}")
        results.update(
            {
                "triangle_c1": tri_est.c1,
                "triangle_c2": tri_est.c2,
                "rectangle_c1": rect_est.c1,
                "rectangle_c2": rect_est.c2,
            }
        )
    print(f"result: {'pass' if ok else 'fail'}")
    if args.report:
        results["passed"] = ok
        _write_report(args.report, results)
    return EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# argument parsing and dispatch
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilewave",
        description="Spectral tiling, folding, and wave observability toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-tiling", help="Monte Carlo tiling and admissibility check")
    p.add_argument("--config", help="config file")
    p.add_argument("--tiling", help="preset tiling name")
    p.add_argument("--tiling-file", help="tiling file to check instead of a preset")
    p.add_argument("--samples", type=int, default=100_000, help="Monte Carlo samples")
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(func=cmd_check_tiling)

    p = sub.add_parser("find-signs", help="enumerate admissible sign patterns")
    p.add_argument("--config", help="config file")
    p.add_argument("--tiling", help="preset tiling name")
    p.add_argument("--tiling-file", help="tiling file to use instead of a preset")
    p.set_defaults(func=cmd_find_signs)

    p = sub.add_parser("build-basis", help="build an eigenbasis and save it")
    p.add_argument("--config", help="config file")
    p.add_argument("--domain", choices=("triangle", "rectangle"), help="override domain")
    p.add_argument("--out", help="output basis file")
    p.set_defaults(func=cmd_build_basis)

    p = sub.add_parser("simulate", help="sample a wave solution onto a grid")
    p.add_argument("--config", required=True, help="config file")
    p.add_argument("--out", required=True, help="output CSV (t,x1,x2,u)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("observe", help="observed energy and constants for one setup")
    p.add_argument("--config", required=True, help="config file")
    p.add_argument("--out", help="output CSV")
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(func=cmd_observe)

    p = sub.add_parser("estimate-constants", help="constants over one or more horizons")
    p.add_argument("--config", required=True, help="config file")
    p.add_argument("--out", help="output CSV")
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(func=cmd_estimate_constants)

    p = sub.add_parser("verify-equivalence", help="check the tile/target energy identity")
    p.add_argument("--config", required=True, help="config file")
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(func=cmd_verify_equivalence)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; fold that into the config exit code
        return EXIT_CONFIG if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericalError, np.linalg.LinAlgError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
