"""Subresultant sequences Sres_{Y,i}(P,Q) with principal coefficients.

Two routes are provided: a pseudo-remainder sequence with the gap
structure scaling (the workhorse), and a literal polynomial-determinant
evaluation of the truncated Sylvester matrices (a desk-scale oracle).
The two must agree exactly, including constants and signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import SepformError
from .poly import NEG_INF, Poly, exact_div

ORACLE_DEGREE_LIMIT = 6


@dataclass(frozen=True)
class SubresultantSequence:
    """Entries i -> (Sres_{Y,i}, sres_{Y,i}) for i = 0..min(q, p-1) (+ q if p == q).

    When p == q over Z and the leading coefficient b_q is not a unit,
    Definition's q-th entry b_q^{-1} Q is not an integer polynomial; we
    then store Q itself at index q and set `top_entry_scaled`.
    """

    var: str
    entries: Dict[int, Poly]
    principals: Dict[int, Poly]
    top_entry_scaled: bool = False

    def subresultant(self, i: int) -> Poly:
        return self.entries[i]

    def principal(self, i: int) -> Poly:
        return self.principals[i]

    @property
    def resultant(self) -> Poly:
        return self.principals[0]


def _lc(p: Poly, var: str) -> Poly:
    return p.leading_coeff(var)


def _deg(p: Poly, var: str) -> int:
    d = p.degree(var)
    return -1 if d is NEG_INF else int(d)


def _prem(F: Poly, G: Poly, var: str) -> Poly:
    """Pseudo-remainder rem(lc(G)^(deg F - deg G + 1) * F, G) wrt var."""
    f = F.dense_coeffs(var)
    g = G.dense_coeffs(var)
    m = len(g)
    lg = g[-1]
    for i in range(len(f) - m, -1, -1):
        c = f[i + m - 1]
        f = [lg * x for x in f]
        for j, gc in enumerate(g):
            f[i + j] = f[i + j] - c * gc
    f = f[: m - 1]
    while f and f[-1].is_zero():
        f.pop()
    if not f:
        return Poly.zero(F.vars, F.field)
    return Poly.from_dense(var, f)


def subresultant_sequence(P: Poly, Q: Poly, var: str = "Y") -> SubresultantSequence:
    """Full subresultant sequence of P, Q wrt `var` (deg P >= deg Q >= 0)."""
    p, q = _deg(P, var), _deg(Q, var)
    if p < 0 or q < 0:
        raise ValueError("subresultants of the zero polynomial are undefined")
    if p < q:
        raise SepformError(
            f"deg_{var}(P) = {p} < deg_{var}(Q) = {q}: swap the arguments"
        )
    entries: Dict[int, Poly] = {}
    scaled = False

    zero = Poly.zero(P.vars, P.field)
    if q == 0:
        # Sylv_0 consists of the p rows of Q only: resultant = Q^p
        # (the empty 0 x 0 determinant gives 1 when p == 0 too).
        entries[0] = Q ** p
        return _finish(var, entries, scaled)

    bq = _lc(Q, var)
    if p > q:
        entries[q] = Q if p - q == 1 else bq ** (p - q - 1) * Q
    else:  # p == q: the extension b_q^{-1} Q needs an invertible b_q
        top, scaled = _top_entry(Q, bq)
        entries[q] = top

    # PRS loop with gap-structure scaling.
    s = bq ** (p - q)
    A = Q
    B = _prem(P, -Q, var)
    while True:
        d = _deg(A, var)
        e = _deg(B, var)
        if B.is_zero():
            for j in range(0, d):
                entries.setdefault(j, zero)
            break
        entries[d - 1] = B
        delta = d - e
        if delta > 1:
            C = exact_div(_lc(B, var) ** (delta - 1) * B, s ** (delta - 1))
            entries[e] = C
            for j in range(e + 1, d - 1):
                entries[j] = zero
        else:
            C = B
        if e == 0:
            break
        B = exact_div(_prem(A, -B, var), s ** delta * _lc(A, var))
        A = C
        s = _lc(A, var)
    return _finish(var, entries, scaled)


def _top_entry(Q: Poly, bq: Poly):
    """The index-q entry b_q^{-1} Q for the p == q case."""
    from fractions import Fraction

    if not bq.is_constant():
        # fraction-field normalization is ambiguous: store Q, flag the scalar
        return Q, True
    c = bq.constant_value()
    if Q.field is not None:
        return Q.scale(Q.field.inv(c)), False
    if c in (1, -1):
        return Q.scale(c), False
    if isinstance(c, Fraction):
        return Q.scale(Fraction(1) / c), False
    return Q, True


def _finish(var: str, entries: Dict[int, Poly], scaled: bool) -> SubresultantSequence:
    principals = {i: e.coefficient(var, i) for i, e in entries.items()}
    return SubresultantSequence(var, entries, principals, scaled)


def resultant(P: Poly, Q: Poly, var: str = "Y") -> Poly:
    """Res_var(P, Q) = Sres_{var,0}; arguments in either degree order."""
    p, q = _deg(P, var), _deg(Q, var)
    if p < q:
        r = resultant(Q, P, var)
        return r if (p * q) % 2 == 0 else -r
    return subresultant_sequence(P, Q, var).subresultant(0)


# ---------------------------------------------------------------------
# Determinant oracle: the truncated-Sylvester definition, evaluated literally
# ---------------------------------------------------------------------

def _det_memo(rows: List[List[Poly]], cols: Tuple[int, ...],
              memo: Dict[Tuple[int, Tuple[int, ...]], Poly], depth: int = 0) -> Poly:
    """Cofactor expansion along rows, memoized on the remaining column set."""
    key = (depth, cols)
    if key in memo:
        return memo[key]
    row = rows[depth]
    if depth == len(rows) - 1:
        out = row[cols[0]]
    else:
        out = None
        for k, c in enumerate(cols):
            entry = row[c]
            if entry.is_zero():
                continue
            minor = _det_memo(rows, cols[:k] + cols[k + 1:], memo, depth + 1)
            term = entry * minor
            if k % 2:
                term = -term
            out = term if out is None else out + term
        if out is None:
            out = Poly.zero(row[0].vars, row[0].field)
    memo[key] = out
    return out


def sylvester_subresultant_oracle(P: Poly, Q: Poly, i: int, var: str = "Y") -> Poly:
    """Sres_{var,i}(P,Q) straight from the truncated Sylvester matrix."""
    p, q = _deg(P, var), _deg(Q, var)
    if p < q:
        raise SepformError("oracle requires deg P >= deg Q")
    if max(p, q) > ORACLE_DEGREE_LIMIT:
        raise SepformError(
            f"determinant oracle limited to degree {ORACLE_DEGREE_LIMIT}"
        )
    if p == q == 0:
        if i != 0:
            raise ValueError("only the 0-th entry exists for two constants")
        return Poly.const(1, P.vars, P.field)
    if i < 0 or i > q:
        raise ValueError(f"index {i} out of range")
    if p == q and i == q:
        bq = Q.leading_coeff(var)
        if Q.field is not None:
            return Q * Poly.const(Q.field.inv(bq.constant_value()), Q.vars, Q.field)
        c = bq.constant_value() if bq.is_constant() else None
        if c in (1, -1):
            return Q.scale(c)
        raise SepformError("q-th entry not defined over Z for non-unit leading coeff")

    a = P.dense_coeffs(var)  # a[k] is the coefficient of var^k
    b = Q.dense_coeffs(var)
    zero = Poly.zero(P.vars, P.field)
    ncols = p + q - i
    rows: List[List[Poly]] = []
    # column c holds the basis monomial var^(p+q-1-c); the i last columns
    # (smallest exponents) are the deleted ones
    for shift in range(q - 1, i - 1, -1):  # rows var^shift * P, i last deleted
        row = [zero] * ncols
        for k, c in enumerate(a):
            col = p + q - 1 - (k + shift)
            if col < ncols:
                row[col] = c
        rows.append(row)
    for shift in range(p - 1, i - 1, -1):  # rows var^shift * Q, i last deleted
        row = [zero] * ncols
        for k, c in enumerate(b):
            col = p + q - 1 - (k + shift)
            if col < ncols:
                row[col] = c
        rows.append(row)

    m = len(rows)  # = p + q - 2i
    memo: Dict[Tuple[int, Tuple[int, ...]], Poly] = {}
    fixed = tuple(range(m - 1))
    y = Poly.var(var, None, P.field)
    out = Poly.zero(P.vars, P.field)
    for j in range(m - 1, ncols):
        det = _det_memo(rows, fixed + (j,), memo)
        if det.is_zero():
            continue
        out = out + det * y ** (ncols - 1 - j)
    return out
