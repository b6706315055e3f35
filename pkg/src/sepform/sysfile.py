"""Reading and writing two-polynomial system files.

Two formats are accepted:

* expression text, one definition per line::

      P = X^2 + Y^2 - 1
      Q = X - Y

  with integer coefficients, variables X and Y, operators ``+ - * ^`` and
  parentheses; ``#`` starts a comment.

* a JSON object mapping "P" and "Q" to term lists ``[[ex, ey, "coeff"], ...]``
  with decimal-string coefficients, for bit-exact interchange.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from .errors import ParseError
from .poly import Poly

_VARS = ("X", "Y")


@dataclass(frozen=True)
class SystemFile:
    P: Poly
    Q: Poly
    source_path: Optional[str] = None

    @property
    def degree(self) -> int:
        return max(self.P.total_degree(), self.Q.total_degree())

    @property
    def bitsize(self) -> int:
        return max(self.P.bitsize(), self.Q.bitsize())


# -- tokenizer ------------------------------------------------------------

_Token = Tuple[str, str, int, int]  # kind, text, line, column


def _tokens(text: str, line_no: int) -> Iterator[_Token]:
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch == "#":
            break
        col = i + 1
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            yield ("int", text[i:j], line_no, col)
            i = j
        elif ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            yield ("name", text[i:j], line_no, col)
            i = j
        elif ch in "+-*^()=":
            yield (ch, ch, line_no, col)
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", line_no, col)
    yield ("end", "", line_no, n + 1)


class _ExprParser:
    """Recursive descent over one line's tokens."""

    def __init__(self, toks: List[_Token]):
        self.toks = toks
        self.pos = 0

    def peek(self) -> _Token:
        return self.toks[self.pos]

    def take(self) -> _Token:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2], tok[3])
        return tok

    def expr(self) -> Poly:
        node = self.term()
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> Poly:
        node = self.factor()
        while self.peek()[0] == "*":
            self.take()
            node = node * self.factor()
        return node

    def factor(self) -> Poly:
        if self.peek()[0] == "-":
            self.take()
            return Poly.zero() - self.factor()
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            tok = self.expect("int")
            return base ** int(tok[1])
        return base

    def atom(self) -> Poly:
        tok = self.take()
        if tok[0] == "int":
            return Poly.const(int(tok[1]))
        if tok[0] == "name":
            if tok[1] not in _VARS:
                raise ParseError(f"unknown variable {tok[1]!r}", tok[2], tok[3])
            return Poly.var(tok[1])
        if tok[0] == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2], tok[3])


def _parse_expr_format(text: str) -> SystemFile:
    defs = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        toks = list(_tokens(raw, line_no))
        if toks[0][0] == "end":
            continue
        head = toks[0]
        if head[0] != "name" or head[1] not in ("P", "Q"):
            raise ParseError("expected a definition of P or Q", head[2], head[3])
        if toks[1][0] != "=":
            raise ParseError("expected '='", toks[1][2], toks[1][3])
        parser = _ExprParser(toks[2:])
        poly = parser.expr()
        parser.expect("end")
        if head[1] in defs:
            raise ParseError(f"duplicate definition of {head[1]}", head[2], head[3])
        defs[head[1]] = poly
    return _finish(defs)


def _parse_json_format(text: str) -> SystemFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno)
    if not isinstance(data, dict):
        raise ParseError("top-level JSON value must be an object", 1, 1)
    defs = {}
    for key in ("P", "Q"):
        terms = data.get(key)
        if not isinstance(terms, list):
            raise ParseError(f"missing or invalid term list for {key}", 1, 1)
        acc = Poly.zero(_VARS)
        for t in terms:
            if (not isinstance(t, list) or len(t) != 3
                    or not isinstance(t[0], int) or not isinstance(t[1], int)):
                raise ParseError(f"malformed term {t!r} in {key}", 1, 1)
            try:
                coeff = int(str(t[2]))
            except ValueError:
                raise ParseError(f"bad coefficient {t[2]!r} in {key}", 1, 1)
            X = Poly.var("X") ** t[0]
            Y = Poly.var("Y") ** t[1]
            acc = acc + (X * Y).scale(coeff)
        defs[key] = acc
    return _finish(defs)


def _finish(defs) -> SystemFile:
    for key in ("P", "Q"):
        if key not in defs:
            raise ParseError(f"no definition of {key}", 1, 1)
        if defs[key].is_zero():
            raise ParseError(f"{key} is the zero polynomial", 1, 1)
    return SystemFile(P=defs["P"], Q=defs["Q"])


def parse_system(text: str, source_path: Optional[str] = None) -> SystemFile:
    """Parse either supported format; the JSON one is detected by its brace."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        sf = _parse_json_format(text)
    else:
        sf = _parse_expr_format(text)
    return SystemFile(P=sf.P, Q=sf.Q, source_path=source_path)


def format_system(sf: SystemFile) -> str:
    """Expression-format text; reparsing it yields identical polynomials."""
    return f"P = {sf.P}\nQ = {sf.Q}\n"
