"""Generic shear X = T - S*Y, leading coefficients and the generic resultant."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .poly import NEG_INF, Poly, canonical_vars
from .subresultant import resultant


@dataclass(frozen=True)
class ShearedSystem:
    P_sheared: Poly
    Q_sheared: Poly
    L_P: Poly
    L_Q: Poly
    d: int
    tau: int


def shear_expand(F: Poly) -> Poly:
    """Substitute X by T - S*Y and expand fully.

    Powers (T - S*Y)^i are built incrementally from (T - S*Y)^(i-1).
    """
    vs = canonical_vars(tuple(F.vars) + ("T", "S", "Y"))
    T = Poly.var("T", vs, F.field)
    S = Poly.var("S", vs, F.field)
    Y = Poly.var("Y", vs, F.field)
    lin = T - S * Y
    cs = F.dense_coeffs("X")
    power = Poly.const(1, vs, F.field)
    acc = Poly.zero(vs, F.field)
    for k, c in enumerate(cs):
        if k > 0:
            power = power * lin
        if not c.is_zero():
            acc = acc + c * power
    return acc


def shear_xy(F: Poly, b) -> Poly:
    """Substitute X by X - b*Y (the concrete in-place shear of the counting step)."""
    vs = canonical_vars(tuple(F.vars) + ("X", "Y"))
    X = Poly.var("X", vs, F.field)
    Y = Poly.var("Y", vs, F.field)
    return F.substitute("X", X - Y.scale(b))


def leading_coeff_in_s(F_sheared: Poly) -> Poly:
    """Lc_Y of a sheared polynomial, as a univariate polynomial in S.

    Independence of T is a structural fact about the shear; asserted here.
    """
    lc = F_sheared.leading_coeff("Y")
    if lc.degree("T") not in (0, NEG_INF):
        raise AssertionError("sheared leading coefficient depends on T")
    out = lc.coefficient("T", 0) if "T" in lc.vars else lc
    vs = ("S",)
    return Poly(vs, {(e[out.vars.index("S")] if "S" in out.vars else 0,): c
                     for e, c in out.coeffs.items()}, out.field)


def shear_leading_coeffs(P: Poly, Q: Poly) -> Tuple[Poly, Poly]:
    """(L_P(S), L_Q(S)): the leading Y-coefficients of the sheared pair."""
    return (leading_coeff_in_s(shear_expand(P)),
            leading_coeff_in_s(shear_expand(Q)))


def sheared_system(P: Poly, Q: Poly) -> ShearedSystem:
    Ps, Qs = shear_expand(P), shear_expand(Q)
    d = max(int(P.total_degree()), int(Q.total_degree()))
    tau = max(P.bitsize(), Q.bitsize()) if P.field is None else 1
    return ShearedSystem(Ps, Qs, leading_coeff_in_s(Ps), leading_coeff_in_s(Qs), d, tau)


def generic_resultant(P: Poly, Q: Poly) -> Poly:
    """R(T,S) = Res_Y(P(T-SY,Y), Q(T-SY,Y)); identically 0 iff P,Q not coprime."""
    Ps, Qs = shear_expand(P), shear_expand(Q)
    return resultant(Ps, Qs, "Y")
