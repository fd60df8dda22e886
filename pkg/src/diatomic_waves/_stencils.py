"""Finite-difference stencil weights on arbitrary node offsets.

Fornberg's recurrence gives exact weights for any derivative order on
any set of distinct nodes; residual checks in this package use it to
build high-order central stencils without hard-coding coefficient
tables.
"""

from __future__ import annotations

import numpy as np

__all__ = ["fd_weights"]


def fd_weights(offsets, order: int) -> np.ndarray:
    """Weights ``w`` with ``f^(order)(0) ~= sum_j w[j] f(offsets[j])``.

    ``offsets`` are distinct node positions relative to the evaluation
    point (not yet scaled by any step size; callers divide the result by
    ``step**order``).
    """
    x = np.asarray(offsets, dtype=float)
    n = x.size
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    if order >= n:
        raise ValueError(f"{n} nodes cannot resolve derivative order {order}")
    c = np.zeros((n, order + 1))
    c[0, 0] = 1.0
    c1 = 1.0
    c4 = x[0]
    for i in range(1, n):
        mn = min(i, order)
        c2 = 1.0
        c5 = c4
        c4 = x[i]
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            if j == i - 1:
                for k in range(mn, 0, -1):
                    c[i, k] = c1 * (k * c[i - 1, k - 1] - c5 * c[i - 1, k]) / c2
                c[i, 0] = -c1 * c5 * c[i - 1, 0] / c2
            for k in range(mn, 0, -1):
                c[j, k] = (c4 * c[j, k] - k * c[j, k - 1]) / c3
            c[j, 0] = c4 * c[j, 0] / c3
        c1 = c2
    return c[:, order]
