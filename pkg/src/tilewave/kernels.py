"""Backend selection for the hot mode-evaluation kernels.

The compiled Cython extension is used when it imported successfully; the
NumPy implementation is the fallback.  Set the environment variable
``TILEWAVE_FORCE_NUMPY=1`` before import to skip the compiled backend.
"""

import os

import numpy as np

from . import _modes_py

if os.environ.get("TILEWAVE_FORCE_NUMPY"):
    _impl = _modes_py
    BACKEND = "numpy"
else:
    try:
        from . import _modes_cy as _impl

        BACKEND = "cython"
    except ImportError:
        _impl = _modes_py
        BACKEND = "numpy"


def _c2(a) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.float64)


def rect_modes(points, k1, k2, a1, a2) -> np.ndarray:
    """Evaluate sin(a1*k1*x) * sin(a2*k2*y) for every point/mode pair.

    Parameters
    ----------
    points : (n, 2) array
    k1, k2 : (m,) arrays of mode indices
    a1, a2 : base frequencies per axis

    Returns
    -------
    (n, m) array of mode values.
    """
    return _impl.rect_modes(_c2(points), _c2(k1), _c2(k2), float(a1), float(a2))


def folded_modes(points, linear, shift, signs, k1, k2, a1, a2) -> np.ndarray:
    """Evaluate the signed sum of sine products over motion images.

    ``linear`` is (H, 2, 2), ``shift`` is (H, 2), ``signs`` is (H,); the
    remaining arguments match :func:`rect_modes`.
    """
    return _impl.folded_modes(
        _c2(points),
        _c2(linear),
        _c2(shift),
        _c2(signs),
        _c2(k1),
        _c2(k2),
        float(a1),
        float(a2),
    )
