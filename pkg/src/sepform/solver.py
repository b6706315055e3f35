"""Lucky-prime solver: solution count and separating linear form over Z.

Given coprime P, Q in Z[X,Y], a prime mu is *lucky* when the system keeps
exactly as many distinct solutions mod mu as it has over C.  The number of
unlucky primes admits an explicit bound Xi(d, tau), so scanning Xi + 1 primes
above 2d^4 and keeping the maximal modular count is guaranteed to hit a lucky
one.  In practice the scan stops at the first prime whose count meets the
rational-side upper bound U (a count can never exceed U, so meeting it
certifies luckiness); the exhaustive scan remains as a fallback.

A separating form X + a*Y is then found by scanning a = 0, 1, 2, ... and
accepting the first a for which the specialized resultant R_mu(T, a) is
squarefree of degree N.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Iterator, List, Optional, Tuple

from .arith import PrimeField, prime_stream
from .counting import count_distinct_mod, distinct_count_upper_bound
from .errors import NotCoprimeError, NotZeroDimensionalError, SepformError
from .poly import (NEG_INF, Poly, gcd_monic, reduce_mod_prime,
                   squarefree_degree)
from .shear import shear_leading_coeffs, shear_xy
from .subresultant import resultant


@dataclass(frozen=True)
class BoundBreakdown:
    """Pieces of the unlucky-prime bound Xi(d, tau); every term rounds up."""

    d: int
    tau: int
    tau_prime: int     # bitsize after one shear
    tau_resultant: int  # bitsize of the coefficients of R(T, S)
    eval_bits: int     # primes lost to one bad specialized evaluation
    gcd_primes: int    # primes lost to a gcd-degree drop
    shear_candidates: int  # 2d^4: values of a that any single system can burn
    total: int


def _clog2(x) -> int:
    return max(0, math.ceil(math.log2(x)))


def _flog2(x) -> int:
    return max(0, math.floor(math.log2(x)))


def unlucky_bound(d: int, tau: int) -> BoundBreakdown:
    """Explicit upper bound on the number of unlucky primes for degree d, bitsize tau."""
    if d < 2:
        raise SepformError("the bound is stated for total degree at least 2")
    if tau < 1:
        raise SepformError("coefficient bitsize must be at least 1")
    tau_prime = tau + d * _clog2(d) + _clog2(d + 1) + 1
    dp = 2 * d
    tau_r = 2 * dp * (tau_prime + _flog2(2 * dp) + 1) + 2 * (_flog2(2 * dp * dp + 1) + 1)
    sigma = 4 * _clog2(d) + 2
    ds = 2 * d * d
    eval_bits = ds * sigma + tau_r + _clog2(ds + 1) + 1
    tau_second = tau_r + 1 + _clog2(2 * d * d)
    gcd_primes = (ds + 1) * (2 * tau_second + _clog2(ds + 1)) + 1
    shear = 2 * d ** 4
    total = 3 * eval_bits + gcd_primes + shear
    return BoundBreakdown(d=d, tau=tau, tau_prime=tau_prime, tau_resultant=tau_r,
                          eval_bits=eval_bits, gcd_primes=gcd_primes,
                          shear_candidates=shear, total=total)


@dataclass(frozen=True)
class LuckyResult:
    count: int
    prime: int
    upper_bound: int
    primes_examined: int
    early_exit: bool
    bound: BoundBreakdown
    # (mu, N_mu) per candidate prime in scan order; N_mu is None when the
    # prime failed the pre-screen (vanishing reduction or shared factor)
    trials: Tuple[Tuple[int, Optional[int]], ...] = ()


@dataclass(frozen=True)
class SeparatingForm:
    a: int               # the form is X + a*Y
    count: int
    prime: int
    certificate_degree: int  # deg of the squarefree part of R_mu(T, a)
    lucky: LuckyResult


def _deg(p: Poly, var: str) -> int:
    d = p.degree(var)
    return -1 if d is NEG_INF else int(d)


def _content_y(F: Poly) -> Poly:
    """Gcd over Q[X] of the Y-coefficients of F."""
    acc = Poly.zero()
    for k in range(_deg(F, "Y") + 1):
        c = F.coefficient("Y", k)
        if c.is_zero():
            continue
        acc = c if acc.is_zero() else gcd_monic(acc, c)
        if acc.is_constant():
            break
    return acc


def check_coprime(P: Poly, Q: Poly) -> None:
    """Exact coprimality test over Q[X, Y]; raises NotCoprimeError otherwise."""
    if P.is_zero() or Q.is_zero():
        raise NotCoprimeError("zero polynomial shares every factor")
    if P.is_constant() or Q.is_constant():
        return
    cg = gcd_monic(_content_y(P), _content_y(Q))
    if not cg.is_constant():
        raise NotCoprimeError("P and Q share a factor depending only on X")
    if _deg(P, "Y") == 0 and _deg(Q, "Y") == 0:
        return  # coprime as X-polynomials: the content check just passed
    if resultant(P, Q, "Y").is_zero():
        raise NotCoprimeError("Res_Y(P, Q) vanishes identically")


def _system_size(P: Poly, Q: Poly) -> Tuple[int, int]:
    d = max(P.total_degree(), Q.total_degree())
    tau = max(P.bitsize(), Q.bitsize())
    return max(d, 2), max(tau, 1)


def _candidate_primes(d: int) -> Iterator[int]:
    return prime_stream(2 * d ** 4 + 1)


def _examine_prime(mu: int, P: Poly, Q: Poly, L_P: Poly, L_Q: Poly) -> Optional[int]:
    """Modular count for one candidate prime, or None when the prime is skipped."""
    field = PrimeField(mu)
    if reduce_mod_prime(L_P, field).is_zero():
        return None
    if reduce_mod_prime(L_Q, field).is_zero():
        return None
    P_m = reduce_mod_prime(P, field)
    Q_m = reduce_mod_prime(Q, field)
    if P_m.is_zero() or Q_m.is_zero():
        return None
    try:
        if _deg(P_m, "Y") >= 0 and _deg(Q_m, "Y") >= 0:
            if resultant(P_m, Q_m, "Y").is_zero():
                return None
        return count_distinct_mod(P, Q, field).count
    except NotCoprimeError:
        return None
    except SepformError:
        return None


def count_and_lucky_prime(P: Poly, Q: Poly, threads: int = 1) -> LuckyResult:
    """Number of distinct complex solutions of P = Q = 0 and a lucky prime.

    Deterministic for fixed inputs regardless of the thread count: candidate
    primes are examined in blocks and the decision rule within each block
    only depends on the block's contents and ordering.
    """
    check_coprime(P, Q)
    d, tau = _system_size(P, Q)
    bound = unlucky_bound(d, tau)
    upper = distinct_count_upper_bound(P, Q)

    best_count, best_prime = -1, -1
    examined = 0
    trials: List[Tuple[int, Optional[int]]] = []
    block = max(1, threads)
    primes = _candidate_primes(d)
    budget = bound.total + 1
    L_P, L_Q = shear_leading_coeffs(P, Q)
    work = lambda mu: _examine_prime(mu, P, Q, L_P, L_Q)
    pool = ThreadPoolExecutor(max_workers=block) if threads > 1 else None
    try:
        while budget > 0:
            chunk = list(islice(primes, min(block, budget)))
            if not chunk:
                break
            budget -= len(chunk)
            results = list(pool.map(work, chunk)) if pool else [work(mu) for mu in chunk]
            for mu, n in zip(chunk, results):
                trials.append((mu, n))
                if n is None:
                    continue
                examined += 1
                if n > best_count:
                    best_count, best_prime = n, mu
                if n == upper:
                    return LuckyResult(count=n, prime=mu, upper_bound=upper,
                                       primes_examined=examined, early_exit=True,
                                       bound=bound, trials=tuple(trials))
    finally:
        if pool:
            pool.shutdown(wait=False)
    if best_count < 0:
        raise SepformError("no candidate prime was usable")
    return LuckyResult(count=best_count, prime=best_prime, upper_bound=upper,
                       primes_examined=examined, early_exit=False, bound=bound,
                       trials=tuple(trials))


def specialized_resultant_degree(P_m: Poly, Q_m: Poly, a: int) -> Optional[int]:
    """deg of the squarefree part of Res_Y(P(X - aY, Y), Q(X - aY, Y)) mod mu.

    Returns None when the resultant degenerates to zero.
    """
    P_a = shear_xy(P_m, a)
    Q_a = shear_xy(Q_m, a)
    R = resultant(P_a, Q_a, "Y")
    if R.is_zero():
        return None
    if R.is_constant():
        return 0
    return squarefree_degree(R)


def separating_form(P: Poly, Q: Poly, threads: int = 1) -> SeparatingForm:
    """Smallest a >= 0 such that X + a*Y takes distinct values on all solutions."""
    lucky = count_and_lucky_prime(P, Q, threads=threads)
    if lucky.count == 0:
        # no solutions: any form separates vacuously, report a = 0
        return SeparatingForm(a=0, count=0, prime=lucky.prime,
                              certificate_degree=0, lucky=lucky)
    field = PrimeField(lucky.prime)
    P_m = reduce_mod_prime(P, field)
    Q_m = reduce_mod_prime(Q, field)
    L_P, L_Q = shear_leading_coeffs(P, Q)
    L_Pm = reduce_mod_prime(L_P, field)
    L_Qm = reduce_mod_prime(L_Q, field)
    d, _ = _system_size(P, Q)
    limit = 2 * d ** 4
    for a in range(limit):
        if L_Pm.evaluate("S", field.reduce(a)).is_zero():
            continue
        if L_Qm.evaluate("S", field.reduce(a)).is_zero():
            continue
        n_a = specialized_resultant_degree(P_m, Q_m, a)
        if n_a is None:
            continue
        if n_a == lucky.count:
            return SeparatingForm(a=a, count=lucky.count, prime=lucky.prime,
                                  certificate_degree=n_a, lucky=lucky)
    raise NotZeroDimensionalError(
        "no separating value below 2d^4: the lucky-prime invariants were violated"
    )
