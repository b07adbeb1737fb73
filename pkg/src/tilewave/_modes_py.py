"""NumPy reference implementation of the mode evaluation kernels.

Both kernels evaluate separable sine products over a batch of points and a
batch of mode indices; ``folded_modes`` additionally sums signed copies over
a family of rigid motions.  The compiled backend in ``_modes_cy`` implements
the same contracts.
"""

import numpy as np


def rect_modes(points, k1, k2, a1, a2):
    """out[i, m] = sin(a1 * k1[m] * x_i) * sin(a2 * k2[m] * y_i)."""
    x = points[:, 0]
    y = points[:, 1]
    return np.sin(np.multiply.outer(x, a1 * k1)) * np.sin(np.multiply.outer(y, a2 * k2))


def folded_modes(points, linear, shift, signs, k1, k2, a1, a2):
    """Signed sum of sine products over motion images.

    out[i, m] = sum_h signs[h] * sin(a1 * k1[m] * X) * sin(a2 * k2[m] * Y)
    with (X, Y) = linear[h] @ points[i] + shift[h].
    """
    out = np.zeros((points.shape[0], k1.shape[0]))
    for h in range(signs.shape[0]):
        q = points @ linear[h].T + shift[h]
        out += signs[h] * rect_modes(q, k1, k2, a1, a2)
    return out
