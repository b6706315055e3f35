"""Subresultant-based triangular decomposition over a field.

Decomposes V(<P, Q, A>) into triangular components (A_i(X), B_i(X,Y))
with A_i squarefree and pairwise coprime, and B_i the i-th subresultant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .errors import NotCoprimeError, SepformError
from .poly import NEG_INF, Poly, exact_div, gcd_monic, squarefree_part
from .subresultant import subresultant_sequence


@dataclass(frozen=True)
class TriangularPair:
    index: int
    A: Poly  # univariate in X, monic, squarefree
    B: Poly  # bivariate in X, Y; Y-degree i on every root of A


def _deg(p: Poly, var: str) -> int:
    d = p.degree(var)
    return -1 if d is NEG_INF else int(d)


def triangular_decompose(P: Poly, Q: Poly, A: Optional[Poly] = None,
                         var_x: str = "X", var_y: str = "Y") -> List[TriangularPair]:
    """Triangular decomposition of <P, Q, A>; A zero (or None) means no restriction.

    Requires deg_Y(Q) <= deg_Y(P) and coprime leading Y-coefficients.
    """
    p, q = _deg(P, var_y), _deg(Q, var_y)
    if q > p:
        raise SepformError(f"deg_{var_y}(Q) = {q} > deg_{var_y}(P) = {p}: swap inputs")
    lp, lq = P.leading_coeff(var_y), Q.leading_coeff(var_y)
    if not (lp.is_constant() or lq.is_constant()):
        g = gcd_monic(lp, lq)
        if _deg(g, var_x) > 0:
            raise SepformError(
                "leading Y-coefficients of P and Q are not coprime; shear first"
            )

    seq = subresultant_sequence(P, Q, var_y)
    res = seq.subresultant(0)
    if res.is_zero():
        raise NotCoprimeError("Res_Y(P, Q) vanishes identically: P, Q not coprime")
    if q == 0:
        # the loop over i = 1..d_Y(Q) would be empty; that is only sound
        # when the resultant carries no roots (callers shear beforehand)
        if _deg(res, var_x) > 0:
            raise SepformError(
                "d_Y(Q) = 0 with nonconstant resultant: shear before decomposing"
            )
        return []

    G_prev = squarefree_part(res)
    if A is not None and not A.is_zero():
        G_prev = gcd_monic(G_prev, A)
    out: List[TriangularPair] = []
    for i in range(1, q + 1):
        sres_i = seq.principal(i)
        G_i = gcd_monic(G_prev, sres_i) if not sres_i.is_zero() else G_prev
        A_i = exact_div(G_prev, G_i)
        A_i = _monic_in(A_i, var_x)
        if _deg(A_i, var_x) > 0:
            out.append(TriangularPair(i, A_i, seq.subresultant(i)))
        G_prev = G_i
        if _deg(G_prev, var_x) <= 0:
            break
    return out


def _monic_in(f: Poly, var: str) -> Poly:
    d = _deg(f, var)
    if d < 0:
        return f
    lc = f.coefficient(var, d).constant_value()
    if lc == 1:
        return f
    if f.field is not None:
        return f.scale(f.field.inv(lc))
    from fractions import Fraction
    return f.scale(Fraction(1) / Fraction(lc))
