"""Prime generation, word-sized prime fields and batch modular reduction.

Everything here is deterministic: primes come from trial division /
sieving, never from probabilistic tests.
"""

from __future__ import annotations

from typing import Iterator, List, Sequence

from .errors import ModulusOverflowError

# Largest modulus we accept: residue products must stay below 2**127 so
# that plain Python int arithmetic never leaves the fast fixed-size path
# for a single multiply.  In practice lucky primes are tiny compared to
# this.
WORD_MODULUS_LIMIT = 2**63


def bitsize(z: int) -> int:
    """Number of bits of |z|; by convention bitsize(0) == 1."""
    return z.bit_length() if z else 1


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_stream(start: int = 2) -> Iterator[int]:
    """Yield primes >= start in increasing order, forever (segmented sieve)."""
    segment = 1 << 16
    base: List[int] = []  # odd primes found so far, for sieving
    lo = max(2, start)
    while True:
        hi = lo + segment
        is_comp = bytearray(hi - lo)
        limit = int(hi**0.5) + 1
        # extend base primes up to sqrt(hi) by trial division (cheap, one-off)
        n = base[-1] + 2 if base else 3
        while n <= limit:
            if _is_prime(n):
                base.append(n)
            n += 2
        for p in base:
            if p * p >= hi:
                break
            first = max(p * p, ((lo + p - 1) // p) * p)
            for m in range(first, hi, p):
                is_comp[m - lo] = 1
        for n in range(lo, hi):
            if n < 2 or (n > 2 and n % 2 == 0):
                continue
            if not is_comp[n - lo] and n >= start:
                yield n
        lo = hi


def first_primes(count: int) -> List[int]:
    """The `count` smallest primes, ascending."""
    if count < 1:
        raise ValueError("count must be >= 1")
    out = []
    for p in prime_stream():
        out.append(p)
        if len(out) == count:
            return out
    raise AssertionError("unreachable")


def primes_above(bound: int, count: int) -> List[int]:
    """The `count` smallest primes strictly greater than `bound`."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    if count < 1:
        raise ValueError("count must be >= 1")
    if bound + 1 >= WORD_MODULUS_LIMIT:
        raise ModulusOverflowError(
            f"bound {bound} leaves no room below the word-sized limit"
        )
    out = []
    for p in prime_stream(bound + 1):
        if p >= WORD_MODULUS_LIMIT:
            raise ModulusOverflowError(
                f"prime {p} exceeds the word-sized modulus limit {WORD_MODULUS_LIMIT}"
            )
        out.append(p)
        if len(out) == count:
            return out
    raise AssertionError("unreachable")


class PrimeField:
    """Arithmetic in Z/mu for a word-sized prime mu; residues in [0, mu)."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int, _trusted: bool = False):
        if modulus >= WORD_MODULUS_LIMIT:
            raise ModulusOverflowError(
                f"modulus {modulus} exceeds the word-sized limit {WORD_MODULUS_LIMIT}"
            )
        if not _trusted and not _is_prime(modulus):
            raise ValueError(f"modulus {modulus} is not prime")
        self.modulus = modulus

    def __repr__(self):
        return f"PrimeField({self.modulus})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("PrimeField", self.modulus))

    def reduce(self, z: int) -> int:
        return z % self.modulus

    def add(self, a: int, b: int) -> int:
        c = a + b
        return c - self.modulus if c >= self.modulus else c

    def sub(self, a: int, b: int) -> int:
        c = a - b
        return c + self.modulus if c < 0 else c

    def neg(self, a: int) -> int:
        return self.modulus - a if a else 0

    def mul(self, a: int, b: int) -> int:
        return a * b % self.modulus

    def inv(self, a: int) -> int:
        if a % self.modulus == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.modulus}")
        return pow(a, -1, self.modulus)

    def pow(self, a: int, e: int) -> int:
        return pow(a, e, self.modulus)


def naive_mod_reduce(values: Sequence[int], primes: Sequence[int]) -> List[List[int]]:
    """Per-pair reduction; the oracle for batch_mod_reduce."""
    return [[v % p for p in primes] for v in values]


def _product_tree(primes: Sequence[int]) -> List[List[int]]:
    levels = [list(primes)]
    while len(levels[-1]) > 1:
        prev = levels[-1]
        nxt = [prev[i] * prev[i + 1] if i + 1 < len(prev) else prev[i]
               for i in range(0, len(prev), 2)]
        levels.append(nxt)
    return levels


def batch_mod_reduce(values: Sequence[int], primes: Sequence[int]) -> List[List[int]]:
    """residues[i][j] = values[i] mod primes[j], via a remainder tree."""
    if not primes:
        raise ValueError("primes must be nonempty")
    if any(p < 2 for p in primes):
        raise ValueError("every prime must be >= 2")
    levels = _product_tree(primes)
    out = []
    for v in values:
        layer = [v % levels[-1][0]]
        for level in reversed(levels[:-1]):
            nxt = []
            for i, m in enumerate(level):
                nxt.append(layer[i // 2] % m)
            layer = nxt
        out.append(layer)
    return out
