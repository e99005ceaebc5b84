"""Exact arithmetic: rational polynomials, orthogonal families, Sturm sign
analysis, rational and GF(2) elimination, and integer normal forms."""

from fractions import Fraction as Rational

from .gf2 import F2Matrix, f2_rank, f2_span_count_with_prefix, f2_span_words_with_prefix, in_span
from .hnf import HNFResult, RankDeficient, hermite_normal_form, lattice_index
from .linalg import SingularMatrix, determinant, solve_linear_system
from .orthopoly import gegenbauer, gegenbauer_combination, gegenbauer_expand, krawtchouk, krawtchouk_value
from .polynomial import RationalPolynomial
from .sturm import isolate_roots, nonpositive_on_interval, positivity_witness, rational_roots

__all__ = [
    "Rational",
    "RationalPolynomial",
    "F2Matrix",
    "HNFResult",
    "RankDeficient",
    "SingularMatrix",
    "determinant",
    "f2_rank",
    "f2_span_count_with_prefix",
    "f2_span_words_with_prefix",
    "gegenbauer",
    "gegenbauer_combination",
    "gegenbauer_expand",
    "hermite_normal_form",
    "in_span",
    "isolate_roots",
    "krawtchouk",
    "krawtchouk_value",
    "lattice_index",
    "nonpositive_on_interval",
    "positivity_witness",
    "rational_roots",
    "solve_linear_system",
]
