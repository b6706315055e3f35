import json
import random

import pytest

from sepform.errors import ParseError
from sepform.poly import Poly
from sepform.sysfile import format_system, parse_system

X = Poly.var("X")
Y = Poly.var("Y")
ONE = Poly.const(1)


def test_expression_format():
    sf = parse_system("P = X^2 + Y^2 - 1\nQ = X - Y\n")
    assert sf.P == X * X + Y * Y - ONE
    assert sf.Q == X - Y
    assert sf.degree == 2
    assert sf.bitsize == 1


def test_json_format():
    text = json.dumps({"P": [[1, 0, "1"]], "Q": [[0, 2, "1"], [0, 0, "-1"]]})
    sf = parse_system(text)
    assert sf.P == X
    assert sf.Q == Y * Y - ONE


def test_bitsize_metadata():
    sf = parse_system("P = 1024*X*Y\nQ = Y\n")
    assert sf.bitsize == 11


def test_comments_parens_and_order():
    sf = parse_system("# a comment\nQ = (X + Y)^2 - 2\n\nP = -X*Y + 3\n")
    assert sf.Q == (X + Y) * (X + Y) - Poly.const(2)
    assert sf.P == Poly.const(3) - X * Y


def test_round_trip_fixed():
    for text in ["P = X^2 + Y^2 - 1\nQ = X - Y\n",
                 "P = -3*X^2*Y + Y - 7\nQ = X*Y + 2\n"]:
        sf = parse_system(text)
        again = parse_system(format_system(sf))
        assert (again.P, again.Q) == (sf.P, sf.Q)


def test_round_trip_random():
    rng = random.Random(12)
    for _ in range(40):
        terms = {(rng.randint(0, 4), rng.randint(0, 4)): rng.randint(-99, 99)
                 for _ in range(6)}
        P = Poly.from_terms(terms.items(), ("X", "Y"))
        if P.is_zero():
            continue
        sf = parse_system(f"P = {P}\nQ = Y\n")
        assert sf.P == P
        again = parse_system(format_system(sf))
        assert again.P == P


@pytest.mark.parametrize("text, fragment", [
    ("P = X^2 +\nQ = Y", "unexpected"),
    ("P = Z + 1\nQ = Y", "unknown variable"),
    ("P = X\n", "no definition of Q"),
    ("P = X\nP = Y\nQ = 1", "duplicate"),
    ("P = 0\nQ = Y", "zero polynomial"),
    ("{\"P\": [[0, 0, \"zz\"]], \"Q\": [[0, 1, \"1\"]]}", "bad coefficient"),
    ("{\"P\": 5, \"Q\": []}", "invalid term list"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_system(text)
    assert fragment in str(err.value)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as err:
        parse_system("P = X\nQ = Y $ 2\n")
    assert err.value.line == 2
    assert err.value.column == 7
