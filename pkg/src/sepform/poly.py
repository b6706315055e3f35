"""Sparse exact polynomials over Z, Q and Z_mu, with the univariate
field kernels (gcd, squarefree part, inversion modulo a polynomial)
used throughout the pipeline.

A polynomial carries an ordered variable tuple and a dict mapping
exponent vectors to coefficients.  Coefficients are Python ints (or
Fractions when working over Q); when `field` is set they are residues
in [0, mu).  Zero coefficients are never stored.  The zero polynomial
has degree -inf (the NEG_INF sentinel), distinct from degree 0.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .arith import PrimeField, bitsize
from .errors import InexactDivisionError, InseparabilityError, NotInvertibleError

Scalar = Union[int, Fraction]
Expo = Tuple[int, ...]

NEG_INF = float("-inf")

# Canonical variable order: input variables first, then the shear
# parameters. Unknown names sort after these, alphabetically.
_VAR_RANK = {"X": 0, "Y": 1, "T": 2, "S": 3}


def _var_key(name: str):
    return (_VAR_RANK.get(name, 10), name)


def canonical_vars(names: Iterable[str]) -> Tuple[str, ...]:
    return tuple(sorted(set(names), key=_var_key))


class Poly:
    """Immutable sparse multivariate polynomial."""

    __slots__ = ("vars", "coeffs", "field")

    def __init__(self, vars: Sequence[str], coeffs: Dict[Expo, Scalar],
                 field: Optional[PrimeField] = None, _normalized: bool = False):
        self.vars = tuple(vars)
        self.field = field
        if _normalized:
            self.coeffs = coeffs
        else:
            clean: Dict[Expo, Scalar] = {}
            for e, c in coeffs.items():
                if field is not None:
                    c = c % field.modulus
                if c:
                    clean[tuple(e)] = c
            self.coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str] = (), field: Optional[PrimeField] = None) -> "Poly":
        return cls(vars, {}, field, _normalized=True)

    @classmethod
    def const(cls, c: Scalar, vars: Sequence[str] = (),
              field: Optional[PrimeField] = None) -> "Poly":
        return cls(vars, {(0,) * len(vars): c}, field)

    @classmethod
    def var(cls, name: str, vars: Optional[Sequence[str]] = None,
            field: Optional[PrimeField] = None) -> "Poly":
        vs = canonical_vars([name]) if vars is None else tuple(vars)
        e = tuple(1 if v == name else 0 for v in vs)
        if name not in vs:
            raise ValueError(f"variable {name} not in {vs}")
        return cls(vs, {e: 1}, field)

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[Expo, Scalar]], vars: Sequence[str],
                   field: Optional[PrimeField] = None) -> "Poly":
        acc: Dict[Expo, Scalar] = {}
        for e, c in terms:
            e = tuple(e)
            acc[e] = acc.get(e, 0) + c
        return cls(vars, acc, field)

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return all(all(x == 0 for x in e) for e in self.coeffs)

    def constant_value(self) -> Scalar:
        if self.is_zero():
            return 0
        [(e, c)] = self.coeffs.items()
        if any(e):
            raise ValueError("not a constant polynomial")
        return c

    def degree(self, var: str):
        """Degree in `var`; NEG_INF for the zero polynomial."""
        if not self.coeffs:
            return NEG_INF
        if var not in self.vars:
            return 0
        i = self.vars.index(var)
        return max(e[i] for e in self.coeffs)

    def total_degree(self):
        if not self.coeffs:
            return NEG_INF
        return max(sum(e) for e in self.coeffs)

    def bitsize(self) -> int:
        """Maximum coefficient bitsize (integer coefficients only)."""
        if self.is_zero():
            return 1
        return max(bitsize(int(c)) for c in self.coeffs.values())

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        if self.field != other.field:
            return False
        a, b = align(self, other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        items = frozenset(
            (tuple((v, k) for v, k in zip(self.vars, e) if k), c)
            for e, c in self.coeffs.items()
        )
        return hash((self.field, items))

    def __repr__(self):
        return f"Poly({self!s})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.vars, e) if k
            )
            if mono:
                cs = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{cs}{mono}")
            else:
                parts.append(str(c))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    # -- scalar helpers ----------------------------------------------

    def _snorm(self, c: Scalar) -> Scalar:
        return c % self.field.modulus if self.field is not None else c

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        a, b = align(self, other)
        acc = dict(a.coeffs)
        for e, c in b.coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return Poly(a.vars, acc, a.field)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: self._snorm(-c) for e, c in self.coeffs.items()},
                    self.field, _normalized=self.field is not None)

    def __mul__(self, other: "Poly") -> "Poly":
        a, b = align(self, other)
        acc: Dict[Expo, Scalar] = {}
        for e1, c1 in a.coeffs.items():
            for e2, c2 in b.coeffs.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Poly(a.vars, acc, a.field)

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.vars, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def scale(self, c: Scalar) -> "Poly":
        if c == 0:
            return Poly.zero(self.vars, self.field)
        return Poly(self.vars, {e: k * c for e, k in self.coeffs.items()}, self.field)

    # -- structure wrt one variable -----------------------------------

    def coefficient(self, var: str, k: int) -> "Poly":
        """Coefficient of var**k, as a polynomial in the remaining variables."""
        if var not in self.vars:
            return self if k == 0 else Poly.zero(self.vars, self.field)
        i = self.vars.index(var)
        rest = self.vars[:i] + self.vars[i + 1:]
        acc = {e[:i] + e[i + 1:]: c for e, c in self.coeffs.items() if e[i] == k}
        return Poly(rest, acc, self.field, _normalized=True)

    def dense_coeffs(self, var: str) -> List["Poly"]:
        """[c_0, ..., c_deg] wrt var, each a Poly in the remaining variables."""
        d = self.degree(var)
        if d is NEG_INF:
            return []
        return [self.coefficient(var, k) for k in range(int(d) + 1)]

    def leading_coeff(self, var: str) -> "Poly":
        d = self.degree(var)
        if d is NEG_INF:
            return Poly.zero(tuple(v for v in self.vars if v != var), self.field)
        return self.coefficient(var, int(d))

    @classmethod
    def from_dense(cls, var: str, coeffs: Sequence["Poly"]) -> "Poly":
        """Inverse of dense_coeffs."""
        acc = Poly.zero((var,), coeffs[0].field if coeffs else None)
        x = None
        for k, c in enumerate(coeffs):
            if c.is_zero():
                continue
            if x is None:
                vs = canonical_vars(c.vars + (var,))
                x = Poly.var(var, vs, c.field)
            acc = acc + c * x ** k
        return acc

    def derivative(self, var: str) -> "Poly":
        i = self.vars.index(var)
        acc: Dict[Expo, Scalar] = {}
        for e, c in self.coeffs.items():
            if e[i] == 0:
                continue
            e2 = e[:i] + (e[i] - 1,) + e[i + 1:]
            acc[e2] = acc.get(e2, 0) + c * e[i]
        return Poly(self.vars, acc, self.field)

    # -- substitution -------------------------------------------------

    def evaluate(self, var: str, value: Scalar) -> "Poly":
        """Substitute a scalar for var (Horner along var)."""
        if var not in self.vars:
            return self
        cs = self.dense_coeffs(var)
        rest = tuple(v for v in self.vars if v != var)
        acc = Poly.zero(rest, self.field)
        for c in reversed(cs):
            acc = acc.scale(value) + c
        return acc

    def evaluate_all(self, assignment: Dict[str, Scalar]) -> Scalar:
        p = self
        for v in self.vars:
            p = p.evaluate(v, assignment[v])
        return p.constant_value()

    def substitute(self, var: str, replacement: "Poly") -> "Poly":
        """Substitute a polynomial for var (used by the shear)."""
        if var not in self.vars:
            return self
        cs = self.dense_coeffs(var)
        rest = tuple(v for v in self.vars if v != var)
        acc = Poly.zero(rest, self.field)
        for c in reversed(cs):
            acc = acc * replacement + c
        return acc

    # -- domain maps --------------------------------------------------

    def map_coeffs(self, fn) -> "Poly":
        return Poly(self.vars, {e: fn(c) for e, c in self.coeffs.items()}, self.field)

    def to_field(self, field: PrimeField) -> "Poly":
        """Reduce an integer polynomial coefficientwise modulo mu."""
        if self.field is not None:
            raise ValueError("already over a prime field")
        return Poly(self.vars, {e: c % field.modulus for e, c in self.coeffs.items()},
                    field)

    def drop_field(self) -> "Poly":
        """Forget the modulus, keeping the canonical residues as integers."""
        return Poly(self.vars, dict(self.coeffs), None, _normalized=True)


def align(a: Poly, b: Poly) -> Tuple[Poly, Poly]:
    """Embed both operands in a common variable list."""
    if a.field != b.field:
        raise ValueError(f"mixed coefficient domains: {a.field} vs {b.field}")
    if a.vars == b.vars:
        return a, b
    vs = canonical_vars(a.vars + b.vars)

    def embed(p: Poly) -> Poly:
        idx = [p.vars.index(v) if v in p.vars else None for v in vs]
        acc = {
            tuple(e[i] if i is not None else 0 for i in idx): c
            for e, c in p.coeffs.items()
        }
        return Poly(vs, acc, p.field, _normalized=True)

    return embed(a), embed(b)


def reduce_mod_prime(f: Poly, field: PrimeField) -> Poly:
    """Coefficientwise reduction Z[...] -> Z_mu[...]."""
    return f.to_field(field)


# ---------------------------------------------------------------------
# Exact multivariate division
# ---------------------------------------------------------------------

def _lex_lead(p: Poly) -> Expo:
    return max(p.coeffs)


def exact_div(f: Poly, g: Poly) -> Poly:
    """Quotient f/g when g divides f exactly in the coefficient domain."""
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return Poly.zero(f.vars, f.field)
    f, g = align(f, g)
    rem = dict(f.coeffs)
    gl = _lex_lead(g)
    glc = g.coeffs[gl]
    quo: Dict[Expo, Scalar] = {}
    field = f.field
    while rem:
        e = max(rem)
        c = rem[e]
        qe = tuple(a - b for a, b in zip(e, gl))
        if any(x < 0 for x in qe):
            raise InexactDivisionError(f"{g} does not divide {f}")
        if field is not None:
            qc = c * field.inv(glc) % field.modulus
        elif isinstance(c, Fraction) or isinstance(glc, Fraction):
            qc = Fraction(c) / Fraction(glc)
        else:
            if c % glc != 0:
                raise InexactDivisionError(f"{g} does not divide {f}")
            qc = c // glc
        quo[qe] = qc
        # rem -= qc * x^qe * g
        for ge, gc in g.coeffs.items():
            te = tuple(a + b for a, b in zip(qe, ge))
            nc = rem.get(te, 0) - qc * gc
            if field is not None:
                nc %= field.modulus
            if nc:
                rem[te] = nc
            else:
                rem.pop(te, None)
    return Poly(f.vars, quo, field)


# ---------------------------------------------------------------------
# Univariate kernels over a field (Z_mu, or Q when field is None)
# ---------------------------------------------------------------------

def _only_var(f: Poly) -> str:
    active = [v for v in f.vars if f.degree(v) not in (0, NEG_INF)]
    if len(active) > 1:
        raise ValueError(f"expected univariate polynomial, got variables {active}")
    if active:
        return active[0]
    return f.vars[0] if f.vars else "X"


def _scalars(f: Poly, var: str) -> List[Scalar]:
    out = []
    for c in f.dense_coeffs(var):
        out.append(c.constant_value())
    return out


def _kadd(field, a, b):
    return field.add(a, b) if field else a + b


def _kmul(field, a, b):
    return field.mul(a, b) if field else a * b


def _kinv(field, a):
    if field:
        return field.inv(a)
    return Fraction(1) / Fraction(a)


def _ktrim(cs: List[Scalar]) -> List[Scalar]:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def _kneg(field, a):
    return field.neg(a) if field else -a


def _kdivmod(field, f: List[Scalar], g: List[Scalar]):
    """Dense univariate division over a field."""
    if not g:
        raise ZeroDivisionError("univariate division by zero")
    f = list(f)
    q = [0] * max(0, len(f) - len(g) + 1)
    ginv = _kinv(field, g[-1])
    for i in range(len(f) - len(g), -1, -1):
        c = _kmul(field, f[i + len(g) - 1], ginv)
        if c:
            q[i] = c
            for j, gc in enumerate(g):
                f[i + j] = _kadd(field, f[i + j], _kneg(field, _kmul(field, gc, c)))
    return _ktrim(q), _ktrim(f)


def _from_scalars(cs: Sequence[Scalar], var: str, field) -> Poly:
    return Poly((var,), {(k,): c for k, c in enumerate(cs) if c}, field)


def _monic(cs: List[Scalar], field) -> List[Scalar]:
    if not cs:
        return cs
    inv = _kinv(field, cs[-1])
    return [_kmul(field, c, inv) for c in cs]


def _kgcd(field, f: List[Scalar], g: List[Scalar]) -> List[Scalar]:
    while g:
        _, r = _kdivmod(field, f, g)
        f, g = g, r
    return _monic(list(f), field)


def gcd_monic(f: Poly, g: Poly) -> Poly:
    """Monic gcd of two univariate polynomials over a field (Q or Z_mu)."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    field = f.field if not f.is_zero() else g.field
    var = _only_var(f if not f.is_zero() else g)
    if g.is_zero():
        return _from_scalars(_monic(_scalars(f, var), field), var, field)
    if f.is_zero():
        return _from_scalars(_monic(_scalars(g, var), field), var, field)
    fa, ga = align(f, g)
    var = _only_var(fa if not fa.is_zero() else ga)
    a, b = _scalars(fa, var), _scalars(ga, var)
    if field is None and all(isinstance(c, int) for c in a + b):
        h = _int_gcd_primitive(a, b)
        return _from_scalars(_monic(h, None), var, None)
    if len(a) < len(b):
        a, b = b, a
    return _from_scalars(_kgcd(field, a, b), var, field)


def squarefree_part(f: Poly) -> Poly:
    """Monic f / gcd(f, f'), the product of the distinct irreducible factors."""
    if f.is_zero():
        raise ValueError("squarefree part of the zero polynomial")
    var = _only_var(f)
    d = f.degree(var)
    if f.field is not None and f.field.modulus <= d:
        raise InseparabilityError(
            f"characteristic {f.field.modulus} <= deg(f) = {d}: squarefree part unsafe"
        )
    if d == 0 or d is NEG_INF:
        return Poly.const(1, (var,), f.field)
    g = gcd_monic(f, f.derivative(var))
    cs = _scalars(f, var)
    gs = _scalars(g, var)
    q, r = _kdivmod_exactish(f.field, cs, gs)
    if r:
        raise InexactDivisionError("gcd(f, f') does not divide f")
    return _from_scalars(_monic(q, f.field), var, f.field)


def _kdivmod_exactish(field, f, g):
    if field is None and any(isinstance(c, int) for c in f + g):
        f = [Fraction(c) for c in f]
        g = [Fraction(c) for c in g]
    return _kdivmod(field, f, g)


def squarefree_degree(f: Poly) -> int:
    """deg of the squarefree part; number of distinct roots in the closure."""
    p = squarefree_part(f)
    d = p.degree(_only_var(p))
    return 0 if d is NEG_INF else int(d)


# ---------------------------------------------------------------------
# Integer univariate gcd via primitive pseudo-remainder sequences
# (controls coefficient growth; Fractions only appear at the monic step)
# ---------------------------------------------------------------------

def _int_content(cs: Sequence[int]) -> int:
    from math import gcd
    c = 0
    for x in cs:
        c = gcd(c, int(x))
    return c


def _int_primitive(cs: List[int]) -> List[int]:
    c = _int_content(cs)
    if c == 0:
        return []
    sign = 1 if cs[-1] > 0 else -1
    c *= sign
    return [x // c for x in cs]


def _prem_int(f: List[int], g: List[int]) -> List[int]:
    """rem(lc(g)^(deg f - deg g + 1) * f, g) over Z."""
    r = list(f)
    m = len(g)
    lg = g[-1]
    for i in range(len(f) - m, -1, -1):
        c = r[i + m - 1]
        r = [lg * x for x in r]
        for j, gc in enumerate(g):
            r[i + j] -= c * gc
    return _ktrim(r)


def _int_gcd_primitive(a: Sequence[int], b: Sequence[int]) -> List[int]:
    """Primitive gcd in Z[x] of two integer coefficient lists."""
    f = _int_primitive([int(c) for c in a])
    g = _int_primitive([int(c) for c in b])
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    while True:
        # primitive PRS step: r = prem(f, g), then strip content
        r = _prem_int(f, g)
        r = _int_primitive(r)
        if not r:
            return g
        if len(r) == 1:
            return [1]
        f, g = g, r


# ---------------------------------------------------------------------
# Arithmetic modulo a univariate polynomial (over Z_mu)
# ---------------------------------------------------------------------

def reduce_bivar_mod_univar(B: Poly, A: Poly, var_y: str = "Y") -> Poly:
    """Reduce every Y-coefficient of B modulo the univariate A(X)."""
    if A.is_zero():
        raise ZeroDivisionError("reduction modulo the zero polynomial")
    field = B.field
    var_x = _only_var(A)
    a = _scalars(A, var_x)
    out: List[Poly] = []
    for cy in B.dense_coeffs(var_y):
        cs = _scalars(cy, var_x) if not cy.is_zero() else []
        _, r = _kdivmod(field, cs, a) if len(cs) >= len(a) else ([], _ktrim(list(cs)))
        out.append(_from_scalars(r, var_x, field))
    return Poly.from_dense(var_y, out) if out else Poly.zero(B.vars, field)


def invert_mod_univar(c: Poly, A: Poly) -> Poly:
    """r with r*c = 1 (mod A), via the extended Euclidean algorithm."""
    if A.is_zero():
        raise ZeroDivisionError("inversion modulo the zero polynomial")
    field = c.field
    var = _only_var(A)
    a = _scalars(A, var)
    b = _scalars(c, var) if not c.is_zero() else []
    if len(b) >= len(a):
        _, b = _kdivmod(field, b, a)
    # extended Euclid on (a, b): track s*b = r (mod a)
    r0, r1 = list(a), list(b)
    s0, s1 = [], [1]
    while r1:
        q, r2 = _kdivmod(field, r0, r1)
        s2 = _poly_sub(field, s0, _poly_mul(field, q, s1))
        r0, r1 = r1, r2
        s0, s1 = s1, s2
    if len(r0) != 1:
        raise NotInvertibleError(
            f"{c} is not invertible modulo {A}: gcd has degree {len(r0) - 1}"
        )
    inv = _kinv(field, r0[0])
    res = [_kmul(field, x, inv) for x in s0]
    return _from_scalars(_ktrim(res), var, field)


def _poly_mul(field, a: List[Scalar], b: List[Scalar]) -> List[Scalar]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] = _kadd(field, out[i + j], _kmul(field, x, y))
    return _ktrim(out)


def _poly_sub(field, a: List[Scalar], b: List[Scalar]) -> List[Scalar]:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out.append(_kadd(field, x, field.neg(y) if field else -y))
    return _ktrim(out)
