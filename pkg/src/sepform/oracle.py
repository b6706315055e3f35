"""Independent cross-checks for the modular solver.

Two oracles live here:

* ``classical_separating_form`` finds the count and a separating form working
  over the integers only - specialize the shear first, take the resultant
  exactly, measure the squarefree degree over Q.  Slow but free of any
  modular reasoning, so disagreement with the lucky-prime route is a bug.

* ``line_arrangement_system`` builds products of rational lines where every
  intersection point is known in closed form, giving systems with an exactly
  enumerable solution set.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .counting import distinct_count_upper_bound, leading_form_value
from .errors import SepformError
from .poly import NEG_INF, Poly, squarefree_degree
from .shear import shear_xy
from .subresultant import resultant
from .solver import check_coprime


def _deg_x(p: Poly) -> int:
    d = p.degree("X")
    return -1 if d is NEG_INF else int(d)


def _specialized_degree(P: Poly, Q: Poly, a: int) -> Optional[int]:
    """deg of the squarefree part of Res_Y(P(X-aY, Y), Q(X-aY, Y)) over Q."""
    R = resultant(shear_xy(P, a), shear_xy(Q, a), "Y")
    if R.is_zero():
        return None
    if R.is_constant():
        return 0
    return squarefree_degree(R)


def classical_separating_form(P: Poly, Q: Poly) -> Tuple[int, int]:
    """(a, N): separating value and distinct-solution count, all over Z.

    For admissible a (neither sheared leading coefficient vanishes), the
    squarefree degree of the specialized resultant counts the distinct values
    of x + a*y on the solutions; it equals N exactly when a separates.  The
    first a meeting the triangular upper bound ends the scan early; otherwise
    the whole admissible range is swept and the maximum wins.
    """
    check_coprime(P, Q)
    if P.is_constant() or Q.is_constant():
        return 0, 0
    d = max(P.total_degree(), Q.total_degree(), 2)
    upper = distinct_count_upper_bound(P, Q)
    best_n, best_a = -1, -1
    for a in range(2 * d ** 4):
        if leading_form_value(P, a) == 0 or leading_form_value(Q, a) == 0:
            continue
        n_a = _specialized_degree(P, Q, a)
        if n_a is None:
            continue
        if n_a == upper:
            return a, n_a
        if n_a > best_n:
            best_n, best_a = n_a, a
    if best_n < 0:
        raise SepformError("no admissible shear value below 2d^4")
    return best_a, best_n


@dataclass(frozen=True)
class LineArrangement:
    """Two products of affine lines with all intersections known exactly."""

    P: Poly
    Q: Poly
    p_lines: List[Tuple[Fraction, Fraction]]  # Y = a*X + b
    q_lines: List[Tuple[Fraction, Fraction]]
    points: List[Tuple[Fraction, Fraction]]   # distinct common solutions


def is_separating(a: int, points: List[Tuple[Fraction, Fraction]]) -> bool:
    """Does X + a*Y take pairwise distinct values on the given points?"""
    return len({x + a * y for x, y in points}) == len(points)


def _line_poly(lines: List[Tuple[Fraction, Fraction]]) -> Poly:
    X, Y = Poly.var("X"), Poly.var("Y")
    acc = Poly.const(1)
    for slope, icept in lines:
        den = math.lcm(slope.denominator, icept.denominator)
        line = Y.scale(den) + X.scale(-den * slope) + Poly.const(-den * icept)
        acc = acc * line
    return acc.map_coeffs(_to_int)


def _to_int(c):
    frac = Fraction(c)
    if frac.denominator != 1:
        raise SepformError("denominator clearing left a fraction behind")
    return frac.numerator


# slope pools per side: disjoint, so every cross pair of lines intersects.
# The larger side uses the cheap pool to keep product coefficients small.
_SLOPES_CHEAP = [Fraction(0), Fraction(1), Fraction(-1)]
_SLOPES_OTHER = [Fraction(2), Fraction(-2), Fraction(1, 2), Fraction(-1, 2)]


def line_arrangement_system(rng: random.Random, m: int, n: int,
                            max_bitsize: int = 16,
                            max_tries: int = 2000) -> LineArrangement:
    """Random m x n line arrangement with all m*n intersections distinct.

    The two factors draw slopes from disjoint pools (parallel lines may occur
    within one factor, never across), so every cross pair meets in exactly one
    rational point.  Draws whose points collide or whose expanded coefficients
    exceed max_bitsize bits are rejected and retried.
    """
    def draw_one(pool: List[Fraction]) -> Tuple[Fraction, Fraction]:
        s = pool[rng.randrange(len(pool))]
        b = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
        return s, b

    for _ in range(max_tries):
        big, small = max(m, n), min(m, n)
        big_lines: set = set()
        while len(big_lines) < big:
            big_lines.add(draw_one(_SLOPES_CHEAP))
        big_sorted = sorted(big_lines)

        # add the other factor's lines one at a time: reject a line whose
        # intersections with the first factor collide (a 3-line concurrence)
        small_lines: List[Tuple[Fraction, Fraction]] = []
        taken: set = set()
        stuck = 0
        while len(small_lines) < small and stuck < 60:
            s2, b2 = draw_one(_SLOPES_OTHER)
            if (s2, b2) in small_lines:
                stuck += 1
                continue
            batch = []
            for s1, b1 in big_sorted:
                x = (b2 - b1) / (s1 - s2)
                batch.append((x, s1 * x + b1))
            if len(set(batch)) < big or taken & set(batch):
                stuck += 1
                continue
            small_lines.append((s2, b2))
            taken |= set(batch)
        if len(small_lines) < small:
            continue
        small_lines.sort()

        p_lines, q_lines = ((big_sorted, small_lines) if m >= n
                            else (small_lines, big_sorted))
        points = []
        for s1, b1 in p_lines:
            for s2, b2 in q_lines:
                x = (b2 - b1) / (s1 - s2)
                points.append((x, s1 * x + b1))
        assert len(set(points)) == m * n
        P, Q = _line_poly(p_lines), _line_poly(q_lines)
        if max(P.bitsize(), Q.bitsize()) > max_bitsize:
            continue
        return LineArrangement(P=P, Q=Q, p_lines=p_lines, q_lines=q_lines,
                               points=points)
    raise SepformError("could not draw an arrangement with distinct points")
