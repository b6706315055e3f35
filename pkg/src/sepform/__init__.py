"""Exact solution counting and separating linear forms for bivariate systems.

Given coprime P, Q in Z[X, Y], this package computes the number N of distinct
complex solutions of P = Q = 0 and a linear form X + a*Y that takes pairwise
distinct values on those solutions, using exact modular arithmetic with a
certified lucky prime.
"""

from .arith import PrimeField, first_primes, prime_stream, primes_above
from .counting import CountTrace, count_distinct_mod, distinct_count_upper_bound
from .errors import (InexactDivisionError, InseparabilityError,
                     ModulusOverflowError, NotCoprimeError, NotInvertibleError,
                     NotZeroDimensionalError, ParseError, SepformError)
from .oracle import (LineArrangement, classical_separating_form,
                     is_separating, line_arrangement_system)
from .poly import Poly, gcd_monic
from .solver import (BoundBreakdown, LuckyResult, SeparatingForm,
                     count_and_lucky_prime, separating_form, unlucky_bound)
from .subresultant import (SubresultantSequence, resultant,
                           subresultant_sequence, sylvester_subresultant_oracle)
from .sysfile import SystemFile, format_system, parse_system
from .triangular import TriangularPair, triangular_decompose

__all__ = [
    "PrimeField", "first_primes", "prime_stream", "primes_above",
    "CountTrace", "count_distinct_mod", "distinct_count_upper_bound",
    "SepformError", "ParseError", "ModulusOverflowError", "NotCoprimeError",
    "NotZeroDimensionalError", "InexactDivisionError", "NotInvertibleError",
    "InseparabilityError",
    "LineArrangement", "classical_separating_form", "is_separating",
    "line_arrangement_system",
    "Poly", "gcd_monic",
    "BoundBreakdown", "LuckyResult", "SeparatingForm",
    "count_and_lucky_prime", "separating_form", "unlucky_bound",
    "SubresultantSequence", "resultant", "subresultant_sequence",
    "sylvester_subresultant_oracle",
    "SystemFile", "format_system", "parse_system",
    "TriangularPair", "triangular_decompose",
]
