"""
The g-index of Young tableaux
=============================

Each letter of a (k-)Young tableau gets a positive weight g(v); G is their
product.  Summing G over tableaux recovers Eulerian, second-order Eulerian
and Andre polynomials.
"""

from math import factorial

from gindex.algebra import format_poly
from gindex.families import andre, eulerian, second_order
from gindex.tableaux import G, KTableau, g_index_k, rho, rho_fiber, syt_all

# A k-Young tableau: bottom row 1 5, top rows 2 3 7 and 4 6
z = KTableau((1, 5), ((2, 3, 7), (4, 6)))
print(z)
print("g =", tuple(g_index_k(z)), "G =", G(z))

# rho sorts each column; the fiber over a SYT carries the same total weight
t = rho(z)
print(t)
print(sum(G(w) for w in rho_fiber(t)), "==", G(t))

# Weighted counts of SYT(n)
for n in range(1, 7):
    tabs = list(syt_all(n))
    print(n, sum(G(t) for t in tabs), factorial(n))

# Polynomials from tableau sums
print(format_poly(eulerian(5, "syt")))
print(format_poly(second_order(5, 2, "syt")))
print(format_poly(andre(6, "syt")))
