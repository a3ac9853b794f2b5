"""Exact integer and rational arithmetic: primality, factorization,
square-free parts, p-adic valuations and quadratic residues.

Python integers are arbitrary precision and :class:`fractions.Fraction`
keeps rationals normalized (positive denominator, coprime terms), so those
two types serve as the big-integer and rational types throughout.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Tuple, Union

from .errors import NotCoprime, NotPrime, ZeroInput

Rational = Union[int, Fraction]

TRIAL_DIVISION_BOUND = 1 << 12

# Miller-Rabin with these bases is deterministic below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def _small_primes(bound: int) -> Tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_SMALL_PRIMES = _small_primes(TRIAL_DIVISION_BOUND)
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas_probable_prime(n: int) -> bool:
    # Selfridge parameters: first D in 5, -7, 9, -11, ... with (D/n) = -1.
    if math.isqrt(n) ** 2 == n:
        return False
    D = 5
    while _jacobi(D, n) != -1:
        D = -D - 2 if D > 0 else -D + 2
    P, Q = 1, (1 - D) // 4
    d, s = n + 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1

    def half(x: int) -> int:
        x %= n
        return (x + n) // 2 if x % 2 else x // 2

    U, V, Qk = 1, P, Q % n
    for bit in bin(d)[3:]:
        U, V = U * V % n, (V * V - 2 * Qk) % n
        Qk = Qk * Qk % n
        if bit == "1":
            U, V = half(P * U + V), half(D * U + P * V)
            Qk = Qk * Q % n
    if U == 0 or V == 0:
        return True
    for _ in range(s - 1):
        V = (V * V - 2 * Qk) % n
        if V == 0:
            return True
        Qk = Qk * Qk % n
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality below 3.3e24 (Miller-Rabin on fixed bases);
    Baillie-PSW above that."""
    if n < 2:
        return False
    if n <= TRIAL_DIVISION_BOUND:
        return n in _SMALL_PRIME_SET
    for p in _SMALL_PRIMES[:50]:
        if n % p == 0:
            return False
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    return _strong_probable_prime(n, 2) and _strong_lucas_probable_prime(n)


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of the odd composite n (deterministic seeds)."""
    for c in range(1, n):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")  # pragma: no cover


@dataclass(frozen=True)
class PrimeFactorization:
    """n = sign * prod(p**e for p, e in primes.items())."""

    primes: Dict[int, int] = field(default_factory=dict)
    sign: int = 1

    def value(self) -> int:
        out = self.sign
        for p, e in self.primes.items():
            out *= p**e
        return out


def _factor_positive(n: int, out: Dict[int, int]) -> None:
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = out.get(p, 0) + e
    if n == 1:
        return
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _pollard_brent(m)
        stack.extend((d, m // d))


def factor(n: int) -> PrimeFactorization:
    """Exact factorization of a nonzero integer, primes in increasing order."""
    n = int(n)
    if n == 0:
        raise ZeroInput("cannot factor 0")
    primes: Dict[int, int] = {}
    _factor_positive(abs(n), primes)
    return PrimeFactorization(dict(sorted(primes.items())), 1 if n > 0 else -1)


@lru_cache(maxsize=1 << 16)
def _squarefree_int(n: int) -> int:
    f = factor(n)
    out = f.sign
    for p, e in f.primes.items():
        if e % 2:
            out *= p
    return out


def squarefree_part(q: Rational) -> int:
    """The square-free integer d with q = d * b**2 for some rational b."""
    q = Fraction(q)
    if q == 0:
        raise ZeroInput("square-free part of 0")
    # n/d = n*d / d**2
    return _squarefree_int(q.numerator * q.denominator)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def padic_split(q: Rational, p: int) -> Tuple[int, Fraction]:
    """Write q = p**valuation * unit with unit a p-adic unit."""
    _check_prime(p)
    q = Fraction(q)
    if q == 0:
        raise ZeroInput("p-adic valuation of 0")
    num, den = q.numerator, q.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, Fraction(num, den)


def is_quadratic_residue(u: int, p: int) -> bool:
    """Euler's criterion for u modulo the odd prime p."""
    if p == 2:
        raise NotPrime("an odd prime is required")
    _check_prime(p)
    if u % p == 0:
        raise NotCoprime(f"{u} is divisible by {p}")
    return pow(u, (p - 1) // 2, p) == 1


def unit_mod(q: Fraction, p: int) -> int:
    """Image in F_p of a rational whose terms are prime to p."""
    return q.numerator * pow(q.denominator, -1, p) % p
