"""
Expanding (cD)^n f four ways
============================

The operator cD applied n times to f gives a sum of products of derivatives
of c times a derivative of f.  Here we build that sum from a slice
recurrence, from inversion sequences, from Comtet's closed sum and from the
type counts p_{k,mu}, and check they agree.
"""

from gindex.combinat import inv_seqs, type_of_seq, types_of
from gindex.expansions import expand_comtet, expand_inversion, expand_recurrence, expand_types, p_value, phi

# The first few expansions, in the text format used by the CLI
for n in range(1, 5):
    print(f"n={n}:", expand_recurrence(n))

# Each inversion sequence contributes one monomial phi(e)
for e in inv_seqs(3):
    print(e, type_of_seq(e), phi(e).to_text())

# Grouping by type: p_{k,mu} counts the sequences of each type
for t in types_of(4):
    print(t, "p =", p_value(t))

# All four constructions give the same polynomial
n = 6
base = expand_recurrence(n).body
print(all(e.body == base for e in (expand_inversion(n), expand_comtet(n), expand_types(n))))
