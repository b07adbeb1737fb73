"""Compare the compiled mode kernels against the NumPy fallback.

Runs both implementations on identical workloads (the shapes that dominate
basis builds and Gram assembly) and prints timings plus the agreement gap.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from tilewave import _modes_py
from tilewave.geometry import FOLD_SIGNS, folding_motions

try:
    from tilewave import _modes_cy
except ImportError:
    _modes_cy = None

A1 = np.pi / np.sqrt(3.0)
A2 = np.pi


def _timeit(fn, repeat):
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    motions = folding_motions()
    lin = np.ascontiguousarray(np.stack([m.linear for m in motions]))
    sh = np.ascontiguousarray(np.stack([m.shift for m in motions]))
    signs = np.array(FOLD_SIGNS, dtype=float)

    workloads = [
        ("gram assembly", 6 * 4**6, 30),
        ("basis build", 48 * 48, 144),
        ("dense sampling", 200_000, 6),
    ]

    if _modes_cy is None:
        print("compiled kernels unavailable; timing the NumPy fallback only")

    header = f"{'workload':<16}{'points':>9}{'modes':>7}{'kernel':>14}"
    header += f"{'numpy':>12}{'compiled':>12}{'speedup':>9}{'max gap':>11}"
    print(header)
    print("-" * len(header))
    for label, n_points, n_modes in workloads:
        pts = rng.uniform((0.0, 0.0), (np.sqrt(3.0), 1.0), size=(n_points, 2))
        k1 = rng.integers(1, 13, size=n_modes).astype(float)
        k2 = rng.integers(1, 13, size=n_modes).astype(float)
        for kernel in ("rect", "folded"):
            if kernel == "rect":
                py_fn = lambda: _modes_py.rect_modes(pts, k1, k2, A1, A2)
                cy_fn = (
                    None
                    if _modes_cy is None
                    else (lambda: np.asarray(_modes_cy.rect_modes(pts, k1, k2, A1, A2)))
                )
            else:
                py_fn = lambda: _modes_py.folded_modes(pts, lin, sh, signs, k1, k2, A1, A2)
                cy_fn = (
                    None
                    if _modes_cy is None
                    else (
                        lambda: np.asarray(
                            _modes_cy.folded_modes(pts, lin, sh, signs, k1, k2, A1, A2)
                        )
                    )
                )
            t_py, out_py = _timeit(py_fn, args.repeat)
            if cy_fn is None:
                print(
                    f"{label:<16}{n_points:>9}{n_modes:>7}{kernel:>14}"
                    f"{t_py * 1e3:>10.1f}ms{'-':>12}{'-':>9}{'-':>11}"
                )
                continue
            t_cy, out_cy = _timeit(cy_fn, args.repeat)
            gap = float(np.abs(out_py - out_cy).max())
            print(
                f"{label:<16}{n_points:>9}{n_modes:>7}{kernel:>14}"
                f"{t_py * 1e3:>10.1f}ms{t_cy * 1e3:>10.1f}ms"
                f"{t_py / t_cy:>8.1f}x{gap:>11.1e}"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
