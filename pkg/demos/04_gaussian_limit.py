# The large-N limit: mean curve, covariance kernel and its matrix identities.
# Run: python demos/04_gaussian_limit.py

import numpy as np

from tableauwalk import continuum, moments

# %% finite-N variance over N approaches 2 x^2 (1-x)^2 at rate 1/N
for N in (100, 500, 2000, 8000):
    v = float(moments.closed_form_variance(N, 0, N // 4)) / N
    print(f"N={N:5}  Var[H(N/4)]/N = {v:.6f}   limit {continuum.fluctuation_variance(0.25):.6f}")

# %% started walks, y0 = 1/2
print("limit variance with y0=1/2:", continuum.fluctuation_variance(np.array([0.25, 0.5, 0.75]), 0.5))

# %% kernel matrix on a grid: determinant and tridiagonal inverse in closed form
x = np.array([0.1, 0.3, 0.5, 0.8])
grid = continuum.covariance_grid(x)
det, inv = continuum.covariance_matrix_analysis(x)
print("det formula", det, " numpy", np.linalg.det(grid.matrix))
print(np.round(inv, 3))
print("max |inv M - I| =", np.abs(inv @ grid.matrix - np.eye(len(x))).max())

# %% the mean curve solves 2 h h'' - h'^2 + 1 = 0
xs = np.linspace(0.01, 0.99, 99)
print("max ODE residual", np.abs(continuum.ode_residual(xs * (1 - xs), 1 - 2 * xs, -2 + 0 * xs)).max())

# %% sections of the kernel are annihilated by the second-variation operator off the diagonal
xs = np.linspace(0.05, 0.45, 81)
print("max |Delta G(., 0.5)| on (0.05, 0.45):", np.abs(continuum.apply_delta_operator(continuum.green_function(xs, 0.5), xs)).max())
