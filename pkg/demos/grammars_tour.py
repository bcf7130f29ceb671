"""
Grammars and formal derivatives
===============================

A grammar maps each letter to a polynomial; D_G is the derivation it
defines.  Iterating D_G produces Eulerian and Andre polynomials.
"""

from gindex.grammars import Grammar, MPoly, andre_grammars, derive_n, dumont_eulerian, u_dg_expansion_check

g = Grammar.parse("x -> x*y; y -> y")
x, y = MPoly.var("x"), MPoly.var("y")
for n in range(1, 4):
    print(n, derive_n(g, x, n))

# (x D_G)^n (y) for x -> y, y -> y carries the Eulerian numbers
print(dumont_eulerian(5))
print(dumont_eulerian(5).substitute({"y": 1}).to_unipoly("x"))

# Two grammars for the Andre polynomials
d1, d2 = andre_grammars(5)
print(d1, "|", d2)

# (u D_G)^n through tableau weights equals direct iteration
print(u_dg_expansion_check(Grammar.parse("x -> y; y -> 1"), x, x, 6))
