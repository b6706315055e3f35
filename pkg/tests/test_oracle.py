import random
from fractions import Fraction

import pytest

from sepform.errors import NotCoprimeError
from sepform.oracle import (classical_separating_form, is_separating,
                            line_arrangement_system)
from sepform.poly import Poly
from sepform.solver import separating_form

X = Poly.var("X")
Y = Poly.var("Y")
ONE = Poly.const(1)
F = Fraction


def test_classical_fixture_systems():
    circle = X * X + Y * Y - ONE
    assert classical_separating_form(X, Y * Y - ONE) == (1, 2)
    assert classical_separating_form(circle, X - Y) == (0, 2)
    assert classical_separating_form(Y * Y - X, Y) == (0, 1)


def test_classical_rejects_common_factor():
    common = Y - X
    with pytest.raises(NotCoprimeError):
        classical_separating_form(common * (Y + ONE), common * (X + ONE))


def test_is_separating_examples():
    pts = [(F(0), F(1)), (F(0), F(-1))]
    assert not is_separating(0, pts)   # vertically aligned
    assert is_separating(1, pts)
    assert is_separating(0, [(F(3), F(4))])  # singleton


def test_single_crossing_arrangement():
    rng = random.Random(1)
    arr = line_arrangement_system(rng, 1, 1)
    assert len(arr.points) == 1
    s1, b1 = arr.p_lines[0]
    s2, b2 = arr.q_lines[0]
    x, y = arr.points[0]
    assert y == s1 * x + b1 == s2 * x + b2


def test_points_lie_on_both_products():
    rng = random.Random(2)
    for _ in range(10):
        arr = line_arrangement_system(rng, rng.randint(1, 3), rng.randint(1, 3))
        for x, y in arr.points:
            assert arr.P.evaluate_all({"X": x, "Y": y}) == 0
            assert arr.Q.evaluate_all({"X": x, "Y": y}) == 0
        assert len(set(arr.points)) == len(arr.p_lines) * len(arr.q_lines)


def test_arrangement_respects_bitsize_cap():
    rng = random.Random(3)
    for _ in range(6):
        arr = line_arrangement_system(rng, 8, rng.randint(1, 8))
        assert max(arr.P.bitsize(), arr.Q.bitsize()) <= 16


def test_failing_directions_are_bounded_by_point_pairs():
    # a fails only when some pair of points shares the value x + a*y, and
    # each pair rules out at most one a
    rng = random.Random(4)
    for _ in range(5):
        arr = line_arrangement_system(rng, 2, 2)
        k = len(arr.points)
        d = max(arr.P.total_degree(), arr.Q.total_degree(), 2)
        failing = [a for a in range(2 * d ** 4)
                   if not is_separating(a, arr.points)]
        assert len(failing) <= k * (k - 1) // 2


def test_classical_and_modular_agree():
    rng = random.Random(5)
    for _ in range(12):
        arr = line_arrangement_system(rng, rng.randint(1, 3), rng.randint(1, 3))
        a_cl, n_cl = classical_separating_form(arr.P, arr.Q)
        sf = separating_form(arr.P, arr.Q)
        assert n_cl == sf.count == len(arr.points)
        assert a_cl == sf.a
        assert is_separating(a_cl, arr.points)
