"""Large-N limit objects for the rescaled walk ``h(x) = H(N x) / N``.

These include the mean curve, the fluctuation variance, and the covariance
kernel ``2 min(x1, x2)^2 (1 - max(x1, x2))^2`` with its matrix identities.
They also include the constant-weight surface tension, the extremal
equation ``2 h h'' - h'^2 + 1 = 0``, and the second-variation operator
whose Green's function is that kernel.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "CovarianceGrid",
    "DegenerateGridError",
    "mean_curve",
    "fluctuation_variance",
    "covariance_kernel",
    "green_function",
    "covariance_grid",
    "covariance_matrix_analysis",
    "surface_tension",
    "ode_residual",
    "central_derivatives",
    "apply_delta_operator",
    "delta_coefficients",
]


class DegenerateGridError(ValueError):
    pass


def mean_curve(x, y0=0.0):
    """``x (1 - x) + y0 (1 - x)^2``, the curve the rescaled walk concentrates on."""
    x = np.asarray(x, dtype=float)
    return x * (1 - x) + y0 * (1 - x) ** 2


def fluctuation_variance(x, y0=0.0):
    """Limit of ``N Var[H(N x) / N]`` for a walk started at ``N y0``.

    ``2 x^2 (1-x)^2 + 2 y0 x (2 - 3x) (1-x)^2 - 4 y0^2 x (1-x)^3``.
    """
    x = np.asarray(x, dtype=float)
    return (
        2 * x**2 * (1 - x) ** 2
        + 2 * y0 * x * (2 - 3 * x) * (1 - x) ** 2
        - 4 * y0**2 * x * (1 - x) ** 3
    )


def covariance_kernel(x1, x2):
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    lo = np.minimum(x1, x2)
    hi = np.maximum(x1, x2)
    return 2 * lo**2 * (1 - hi) ** 2


green_function = covariance_kernel


@dataclass(frozen=True)
class CovarianceGrid:
    points: np.ndarray
    matrix: np.ndarray


def _check_grid(points) -> np.ndarray:
    x = np.asarray(points, dtype=float)
    if x.ndim != 1 or x.size == 0:
        raise DegenerateGridError("need a non-empty 1-d grid")
    if np.any(x <= 0) or np.any(x >= 1):
        raise DegenerateGridError("grid points must lie strictly inside (0, 1)")
    if np.any(np.diff(x) <= 0):
        raise DegenerateGridError("grid points must be strictly increasing")
    return x


def covariance_grid(points) -> CovarianceGrid:
    x = _check_grid(points)
    return CovarianceGrid(x, covariance_kernel(x[:, None], x[None, :]))


def covariance_matrix_analysis(points) -> tuple[float, np.ndarray]:
    """Determinant and inverse of the kernel matrix from their product formulas.

    With ``c(i, j) = 2 x_i^2 (1 - x_j)^2`` and
    ``z(i, j) = 2 (x_j - x_i)(x_j - 2 x_i x_j + x_i)``:

    * ``det = c(1, n) * prod_i z(i-1, i)``
    * the inverse is tridiagonal. It is grown one point at a time: pad the
      previous inverse with zeros and add a 2x2 block in the lower-right
      corner.
    """
    x = _check_grid(points)
    n = x.size
    det = 2 * x[0] ** 2 * (1 - x[-1]) ** 2
    inv = np.zeros((n, n))
    inv[0, 0] = 1.0 / (2 * x[0] ** 2 * (1 - x[0]) ** 2)
    for m in range(1, n):
        a, b = x[m - 1], x[m]
        z = 2 * (b - a) * (b - 2 * a * b + a)
        det *= z
        inv[m - 1, m - 1] += (1 - b) ** 2 / ((1 - a) ** 2 * z)
        inv[m - 1, m] -= 1 / z
        inv[m, m - 1] -= 1 / z
        inv[m, m] += (1 - a) ** 2 / ((1 - b) ** 2 * z)
    return float(det), inv


def surface_tension(v: float, p: float, q: float) -> float:
    """Growth rate of weighted +-1 paths at slope ``v`` with step weights ``p`` (up), ``q`` (down)."""
    if not -1 <= v <= 1:
        raise ValueError("slope must lie in [-1, 1]")
    if p <= 0 or q <= 0:
        raise ValueError("weights must be positive")
    a, b = (1 + v) / 2, (1 - v) / 2

    def xlogx(t):
        return 0.0 if t == 0 else t * np.log(t)

    return float(a * np.log(p) + b * np.log(q) - xlogx(a) - xlogx(b))


def ode_residual(h, dh, d2h):
    """``2 h h'' - h'^2 + 1`` from values of h and its first two derivatives."""
    h, dh, d2h = (np.asarray(a, dtype=float) for a in (h, dh, d2h))
    return 2 * h * d2h - dh**2 + 1


def _uniform_step(x: np.ndarray) -> float:
    steps = np.diff(x)
    if steps.size == 0 or not np.allclose(steps, steps[0], rtol=1e-9, atol=0):
        raise DegenerateGridError("grid must be uniform")
    return float(steps[0])


def central_derivatives(f, x) -> tuple[np.ndarray, np.ndarray]:
    """Second-order central first and second derivatives at ``x[1:-1]``."""
    f = np.asarray(f, dtype=float)
    x = np.asarray(x, dtype=float)
    h = _uniform_step(x)
    d1 = (f[2:] - f[:-2]) / (2 * h)
    d2 = (f[2:] - 2 * f[1:-1] + f[:-2]) / h**2
    return d1, d2


def delta_coefficients(x):
    """Coefficients ``(a2, a1, a0)`` of ``a2 f'' + a1 f' + a0 f`` for the operator."""
    x = np.asarray(x, dtype=float)
    s = x * (1 - x)
    return -1 / (2 * s), (1 - 2 * x) / (2 * s**2), 1 / s**2


def apply_delta_operator(f, x) -> np.ndarray:
    """Discretized ``-(f''/(2x(1-x))) + (1-2x) f'/(2x^2(1-x)^2) + f/(x^2(1-x)^2)``.

    ``f`` holds samples on the uniform grid ``x`` inside (0, 1). The result
    lives on ``x[1:-1]``.
    """
    x = np.asarray(x, dtype=float)
    f = np.asarray(f, dtype=float)
    if x.size < 5:
        raise DegenerateGridError("grid too coarse: need at least 5 points")
    if f.shape != x.shape:
        raise ValueError("f and x must have the same shape")
    if x[0] <= 0 or x[-1] >= 1:
        raise DegenerateGridError("grid must lie strictly inside (0, 1)")
    d1, d2 = central_derivatives(f, x)
    a2, a1, a0 = delta_coefficients(x[1:-1])
    return a2 * d2 + a1 * d1 + a0 * f[1:-1]
