"""
Eulerian-type families and their series
========================================

Every family is computed by a recurrence and by at least one brute-force
count; the operator series identities are checked as truncated power series
with exact rational coefficients.
"""

from gindex.algebra import format_poly
from gindex.families import (
    all_routes,
    gamma_eulerian,
    left_ascent_plateau,
    one_over_k,
    one_over_k_series,
    second_order,
    second_order_series,
    type_b,
)

# One polynomial, many constructions
for method, p in all_routes("andre", 5).items():
    print(f"{method:>10}: {format_poly(p)}")

# 1/k-Eulerian polynomials by excedances and cycles, and by s-inversion sequences
for k in (1, 2, 3):
    routes = all_routes("one-over-k", 4, k)
    print(k, {m: format_poly(p) for m, p in routes.items()})

# Left ascent plateaus and type B
print(format_poly(left_ascent_plateau(4)), "|", format_poly(type_b(4)))

# (x/(1-x)^k d/dx)^n 1/(1-x), rescaled, is C_n(x; k+1)
print(second_order_series(3, 1, 12))
print(format_poly(second_order(3, 2)))

# (2x d/dx)^n (1-x)^(-1/2), rescaled, is the reversal of A_n^(2)
print(one_over_k_series(3, 2, 12))
print(format_poly(one_over_k(3, 2).reversal(3)))

# Gamma coefficients of A_n(x)
print(gamma_eulerian(7))
