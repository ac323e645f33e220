# Exact rational moments of the area walk and their closed forms.
# Run: python demos/02_exact_moments.py

from fractions import Fraction

from tableauwalk import moments
from tableauwalk.walk import WalkConfig, evolve_distribution

N, Y0 = 12, 4

# %% full law of H(X) from the master equation
slices = evolve_distribution(WalkConfig(N, Y0))
for s in slices[:5]:
    print(s.X, {y: str(p) for y, p in sorted(s.probs.items())})

# %% moments from the recursion agree with the slices and with the closed forms
for X in range(0, N + 1, 3):
    m1 = moments.moment(N, Y0, X, 1)
    m2 = moments.moment(N, Y0, X, 2)
    print(
        f"X={X:2}  E[H]={str(m1):>10}  closed={str(moments.closed_form_mean(N, Y0, X)):>10}"
        f"  Var={str(moments.closed_form_variance(N, Y0, X)):>12}  slice E[H^2]={str(slices[X].moment(2))}"
        f"  recursion E[H^2]={m2}"
    )

# %% covariances and a three-point mixed moment
print("Cov[H(3), H(8)] =", moments.covariance(N, Y0, 3, 8))
print("E[H(2) H(5)^2 H(9)] =", moments.mixed_moment(N, Y0, (2, 5, 9), (1, 2, 1)))

# %% volume = sum of heights
print("E[V] =", moments.volume_mean(N, Y0), " Var[V] =", moments.volume_variance(N, Y0))

# %% weighted sums of y^a x^b are polynomial in (N, Y0)
samples = [
    (n, y, moments.weighted_sum_expectation(n, y, {(0, 2): Fraction(1)}) / (n + 1))
    for n in range(1, 15)
    for y in range(n % 2, n + 1, 2)
]
Q = moments.fit_bivariate_polynomial(samples, 3)
print("E[sum H^2] / (N+1) =", " + ".join(f"{c}*N^{i}*Y0^{j}" for (i, j), c in sorted(Q.items()) if c))
