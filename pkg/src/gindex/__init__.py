"""Exact expansions of (cD)^n f, g-indexes of Young tableaux and Eulerian-type families.

All arithmetic is exact (``int`` and ``fractions.Fraction``).  Each quantity
can be computed by more than one construction, and the oracles module holds
brute-force enumerations to cross-check them.
"""

from .algebra import DiffPolynomial, TruncSeries, UniPoly, format_poly, one_minus_x_pow, series_pow_rational
from .combinat import TypeKMu, inv_seqs, partitions_of, psi, type_of_seq, types_of
from .errors import GrammarSyntaxError, SizeError
from .expansions import (
    Expansion,
    PTable,
    comtet_Ank,
    expand_comtet,
    expand_inversion,
    expand_recurrence,
    expand_types,
    p_value,
    phi,
)
from .families import (
    andre,
    eulerian,
    eulerian_classic,
    frobenius_check,
    gamma_checks,
    left_ascent_plateau,
    one_over_k,
    second_order,
    type_b,
    verify_classical_series,
    verify_operator_identities,
)
from .grammars import Grammar, MPoly, andre_grammars, derive, dumont_eulerian, u_dg_expansion_check
from .tableaux import G, KTableau, Tableau, g_index, g_index_k, ktableaux_of, rho, rho_fiber, syt_all

__version__ = "0.1.0"

__all__ = [
    "DiffPolynomial", "TruncSeries", "UniPoly", "format_poly", "one_minus_x_pow", "series_pow_rational",
    "TypeKMu", "inv_seqs", "partitions_of", "psi", "type_of_seq", "types_of",
    "GrammarSyntaxError", "SizeError",
    "Expansion", "PTable", "comtet_Ank", "expand_comtet", "expand_inversion", "expand_recurrence",
    "expand_types", "p_value", "phi",
    "andre", "eulerian", "eulerian_classic", "frobenius_check", "gamma_checks", "left_ascent_plateau",
    "one_over_k", "second_order", "type_b", "verify_classical_series", "verify_operator_identities",
    "Grammar", "MPoly", "andre_grammars", "derive", "dumont_eulerian", "u_dg_expansion_check",
    "G", "KTableau", "Tableau", "g_index", "g_index_k", "ktableaux_of", "rho", "rho_fiber", "syt_all",
]
