import random

import pytest

from sepform.errors import NotCoprimeError, SepformError
from sepform.oracle import is_separating, line_arrangement_system
from sepform.poly import Poly
from sepform.solver import (check_coprime, count_and_lucky_prime,
                            separating_form, unlucky_bound)

X = Poly.var("X")
Y = Poly.var("Y")
ONE = Poly.const(1)


def test_fixture_systems():
    circle = X * X + Y * Y - ONE
    cases = [
        (X, Y * Y - ONE, 2, 1),
        (circle, X + Y - ONE, 2, 0),
        (Y * Y - X, Y, 1, 0),
    ]
    for P, Q, want_n, want_a in cases:
        sf = separating_form(P, Q)
        assert (sf.count, sf.a) == (want_n, want_a)


def test_vertical_pair_needs_a_1():
    # both solutions of X = 0, Y^2 = 1 share x, so a = 0 cannot separate
    sf = separating_form(X, Y * Y - ONE)
    assert sf.a == 1


def test_tangent_circles_fall_back_to_full_scan():
    sf = separating_form(X * X + Y * Y - ONE,
                         (X - Poly.const(2)) ** 2 + Y * Y - ONE)
    assert sf.count == 1
    assert not sf.lucky.early_exit
    assert sf.lucky.upper_bound == 2  # non-radical: bound strictly above N


def test_no_solutions_system():
    # parallel lines: coprime, empty variety
    sf = separating_form(Y - X, Y - X - ONE)
    assert sf.count == 0 and sf.a == 0


def test_coprimality_preflight():
    common = Y - X
    with pytest.raises(NotCoprimeError):
        count_and_lucky_prime(common * (Y + ONE), common * (X - ONE))
    with pytest.raises(NotCoprimeError):
        # shared factor depending on X only
        count_and_lucky_prime((X - ONE) * Y, (X - ONE) * (Y + ONE))
    check_coprime(X, Y)  # must not raise


def test_unlucky_bound_regression_and_monotonicity():
    assert unlucky_bound(2, 1).total == 2232
    b1 = unlucky_bound(3, 4).total
    assert unlucky_bound(4, 4).total > b1
    assert unlucky_bound(3, 8).total > b1
    with pytest.raises(SepformError):
        unlucky_bound(1, 4)


def test_lucky_prime_exceeds_shear_budget():
    for P, Q in [(X, Y * Y - ONE), (X * X + Y * Y - ONE, X + Y - ONE)]:
        res = count_and_lucky_prime(P, Q)
        d = max(P.total_degree(), Q.total_degree(), 2)
        assert res.prime > 2 * d ** 4


def test_trials_record_skips_and_deficits():
    res = count_and_lucky_prime(X, Y * Y - ONE)
    failures = sum(1 for _, n in res.trials if n is None or n < res.count)
    assert failures <= res.bound.total
    assert any(n == res.count for _, n in res.trials)


def test_thread_count_does_not_change_results():
    rng = random.Random(77)
    for _ in range(5):
        arr = line_arrangement_system(rng, rng.randint(1, 3), rng.randint(1, 3))
        base = separating_form(arr.P, arr.Q, threads=1)
        for threads in (2, 4):
            again = separating_form(arr.P, arr.Q, threads=threads)
            assert (again.a, again.count, again.prime) == \
                   (base.a, base.count, base.prime)


def test_returned_form_separates_known_points():
    rng = random.Random(88)
    for _ in range(10):
        arr = line_arrangement_system(rng, rng.randint(2, 4), rng.randint(1, 4))
        sf = separating_form(arr.P, arr.Q)
        assert sf.count == len(arr.points)
        assert is_separating(sf.a, arr.points)
        d = max(arr.P.total_degree(), arr.Q.total_degree(), 2)
        assert sf.a < 2 * d ** 4
