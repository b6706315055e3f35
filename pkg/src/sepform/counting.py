"""Counting distinct solutions of a bivariate system modulo a prime.

The count is obtained without root isolation: after a shear that makes the
leading Y-coefficient of P a unit, a first-level triangular decomposition
splits the fibers by gcd degree, and a second-level decomposition of each
(normalized) gcd against its Y-derivative measures how many of those roots
coincide.  The number of distinct solutions is then

    N = sum_i ( i * deg A_i  -  sum_j j * deg A_ij ).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional

from .arith import PrimeField
from .errors import NotCoprimeError, SepformError
from .poly import (NEG_INF, Poly, invert_mod_univar, reduce_bivar_mod_univar,
                   reduce_mod_prime)
from .shear import shear_xy
from .triangular import TriangularPair, triangular_decompose


@dataclass(frozen=True)
class CountTrace:
    """Everything produced while counting distinct solutions mod one prime."""

    modulus: int
    shear_value: int  # b: the substitution used was X -> X - b*Y
    count: int
    first_level: List[TriangularPair] = dc_field(default_factory=list)
    second_level: Dict[int, List[TriangularPair]] = dc_field(default_factory=dict)


def _deg(p: Poly, var: str) -> int:
    d = p.degree(var)
    return -1 if d is NEG_INF else int(d)


def leading_form_value(F: Poly, b):
    """Value at S = b of the leading Y-coefficient of F(X - S*Y, Y).

    Only the terms of maximal total degree contribute: the coefficient of
    Y^deg(F) in the sheared polynomial is sum c_{ex,ey} (-S)^ex over those.
    Works over the integers or over a prime field, matching F.
    """
    d = F.total_degree()
    acc = F.field.reduce(0) if F.field is not None else 0
    for expo, c in F.coeffs.items():
        ex = expo[F.vars.index("X")] if "X" in F.vars else 0
        if sum(expo) != d:
            continue
        term = c * pow(-b, ex) if ex else c
        acc = F.field.add(acc, F.field.reduce(term)) if F.field is not None else acc + term
    return acc


def choose_shear_value(P: Poly, limit: Optional[int] = None) -> int:
    """Smallest b >= 0 with leading_form_value(P, b) != 0."""
    d = P.total_degree()
    stop = limit if limit is not None else d + 1
    if P.field is not None:
        stop = min(stop, P.field.modulus)
    for b in range(stop):
        if leading_form_value(P, b) != 0:
            return b
    raise SepformError("no shear value avoids the vanishing leading coefficient")


def _monic_y_reduced(B: Poly, A: Poly, var_x: str, var_y: str) -> Poly:
    """Reduce B mod A coefficient-wise and scale so the top Y-coefficient is 1."""
    lead = B.leading_coeff(var_y)
    inv = invert_mod_univar(lead, A)
    scaled = B * inv
    return reduce_bivar_mod_univar(scaled, A, var_y=var_y)


def _count_for_shear(P_b: Poly, Q_b: Poly, var_x: str, var_y: str):
    """First- and second-level decompositions for one concrete shear.

    Raises NotCoprimeError when Res_Y(P_b, Q_b) vanishes identically (the
    inputs share a factor; no shear fixes that) and SepformError when the
    particular shear degenerates and the caller should try another one.
    """
    first = triangular_decompose(P_b, Q_b, var_x=var_x, var_y=var_y)
    total = 0
    second: Dict[int, List[TriangularPair]] = {}
    for pair in first:
        total += pair.index * _deg(pair.A, var_x)
        B_tilde = _monic_y_reduced(pair.B, pair.A, var_x, var_y)
        dB = B_tilde.derivative(var_y)
        try:
            sub = triangular_decompose(B_tilde, dB, A=pair.A,
                                       var_x=var_x, var_y=var_y)
        except NotCoprimeError:
            # B_tilde has a repeated Y-factor globally; a different shear
            # separates the offending fibers
            raise SepformError("repeated-factor degeneracy at this shear value")
        second[pair.index] = sub
        for dup in sub:
            total -= dup.index * _deg(dup.A, var_x)
    return total, first, second


def count_distinct_mod(P: Poly, Q: Poly, field: PrimeField,
                       var_x: str = "X", var_y: str = "Y") -> CountTrace:
    """Number of distinct solutions of P = Q = 0 over the algebraic closure of F_mu.

    P and Q are integer polynomials in X, Y; they are reduced mod the field's
    prime first.  Raises NotCoprimeError if the reductions share a factor and
    SepformError if either reduction vanishes or every shear degenerates.
    """
    P_m = reduce_mod_prime(P, field)
    Q_m = reduce_mod_prime(Q, field)
    if P_m.is_zero() or Q_m.is_zero():
        raise SepformError("input vanishes modulo the chosen prime")
    if P_m.is_constant() or Q_m.is_constant():
        # a nonzero constant equation has no solutions at all
        return CountTrace(modulus=field.modulus, shear_value=0, count=0)
    if P_m.total_degree() < Q_m.total_degree():
        P_m, Q_m = Q_m, P_m

    d = P_m.total_degree()
    bound = min(2 * d * d + d + 2, field.modulus)
    last_error: Optional[SepformError] = None
    for b in range(bound):
        if leading_form_value(P_m, b) == 0:
            continue
        P_b = shear_xy(P_m, b)
        Q_b = shear_xy(Q_m, b)
        if _deg(Q_b, var_y) > _deg(P_b, var_y):
            P_b, Q_b = Q_b, P_b
        try:
            total, first, second = _count_for_shear(P_b, Q_b, var_x, var_y)
        except NotCoprimeError:
            raise
        except SepformError as exc:
            last_error = exc
            continue
        return CountTrace(modulus=field.modulus, shear_value=b, count=total,
                          first_level=first, second_level=second)
    raise last_error or SepformError("no usable shear value found")


def distinct_count_upper_bound(P: Poly, Q: Poly,
                               var_x: str = "X", var_y: str = "Y") -> int:
    """U = sum_i i * deg A_i from a first-level decomposition over the rationals.

    Each component contributes deg A_i fibers carrying at most i distinct
    roots each, so U bounds the number of distinct complex solutions.
    """
    if P.field is not None or Q.field is not None:
        raise SepformError("upper bound is computed over the rationals")
    if P.is_zero() or Q.is_zero():
        raise NotCoprimeError("zero polynomial shares every factor")
    if P.is_constant() or Q.is_constant():
        return 0
    if P.total_degree() < Q.total_degree():
        P, Q = Q, P
    d = P.total_degree()
    last_error: Optional[SepformError] = None
    for b in range(2 * d * d + d + 2):
        if leading_form_value(P, b) == 0:
            continue
        P_b = shear_xy(P, b)
        Q_b = shear_xy(Q, b)
        if _deg(Q_b, var_y) > _deg(P_b, var_y):
            P_b, Q_b = Q_b, P_b
        try:
            first = triangular_decompose(P_b, Q_b, var_x=var_x, var_y=var_y)
        except NotCoprimeError:
            raise
        except SepformError as exc:
            last_error = exc
            continue
        return sum(pair.index * _deg(pair.A, var_x) for pair in first)
    raise last_error or SepformError("no usable shear value found")
