"""Exact power-series identities behind the squared-generator law.

The finite-block moment families invert in closed form under series
reversion, their R-series differ by a free Poisson term, and in the limit
the free cumulants of p^p/(p+1)! match -1/((1-z)log(1-z)) - 1/z.
"""

from dtmoments import (
    Series,
    finite_n_r_relation_check,
    kn_inverse_check,
    l_limit_inverse_check,
    ln_inverse_check,
    moments_to_free_cumulants,
    r_transform_closed_form,
    tstt_moment,
)

print("reversion identities (exact, to order 8):")
for n in (1, 2, 3):
    print(f"  N={n}: strict-block {kn_inverse_check(n, 8)}, full-block {ln_inverse_check(n, 8)}")
print(f"  limit series inverts to z e^-z: {l_limit_inverse_check(8)}")

print("\nR-series shift between the two block families:")
for n in (1, 2, 3, 5):
    print(f"  N={n}: R_full = R_strict + 1/(N(1-z)) -> {finite_n_r_relation_check(n, 8)}")

print("\nfree cumulants of the squared-generator moments:")
moments = [tstt_moment(p) for p in range(1, 9)]
kappa = moments_to_free_cumulants(Series.from_one_indexed(moments))
closed = r_transform_closed_form(8)
print(f"  {'j':>2} {'cumulant':>10} {'closed form':>12}")
for j in range(1, 9):
    print(f"  {j:>2} {str(kappa[j]):>10} {str(closed[j - 1]):>12}")
