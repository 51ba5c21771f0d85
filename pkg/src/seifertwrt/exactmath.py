"""Exact rational primitives: Bernoulli polynomials, the sawtooth function,
Dedekind sums, Stirling numbers, generalized binomials, and the negative
special values of the Hurwitz zeta function.

Everything here returns ``fractions.Fraction`` (or plain ``int``), so the
topological quantities built on top stay exact end to end.
"""
from __future__ import annotations

import math
from fractions import Fraction
from math import comb, gcd
from typing import List

__all__ = [
    "Rational",
    "bernoulli_number",
    "bernoulli_poly",
    "sawtooth",
    "dedekind_sum",
    "dedekind_sum_direct",
    "stirling_first",
    "gen_binomial",
    "hurwitz_zeta_neg",
]

# Exact scalars are plain Fractions: always lowest terms, denominator > 0.
Rational = Fraction

_bernoulli: List[Fraction] = [Fraction(1)]


def bernoulli_number(n: int) -> Fraction:
    """B_n with the B_1 = -1/2 convention, cached via the binomial recurrence."""
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    while len(_bernoulli) <= n:
        m = len(_bernoulli)
        s = sum(Fraction(comb(m + 1, j)) * _bernoulli[j] for j in range(m))
        _bernoulli.append(-s / (m + 1))
    return _bernoulli[n]


def bernoulli_poly(k: int, x) -> Fraction:
    """The Bernoulli polynomial B_k(x), from t*e^{xt}/(e^t - 1)."""
    if k < 0:
        raise ValueError("Bernoulli degree must be non-negative")
    x = Fraction(x)
    return sum(
        Fraction(comb(k, j)) * bernoulli_number(j) * x ** (k - j) for j in range(k + 1)
    )


def sawtooth(x) -> Fraction:
    """((x)): x - floor(x) - 1/2 off the integers, 0 on them."""
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - math.floor(x) - Fraction(1, 2)


def dedekind_sum(b: int, a: int) -> Fraction:
    """Dedekind sum s(b, a) for coprime a >= 1, via the reciprocity recursion.

    Runs in O(log a) like the Euclidean algorithm; the defining O(a) sum is
    kept separately in :func:`dedekind_sum_direct` as a cross-check.
    """
    if a < 1:
        raise ValueError(f"modulus must be positive, got a={a}")
    if gcd(a, b) != 1:
        raise ValueError(f"arguments must be coprime, got gcd({b}, {a}) = {gcd(a, b)}")
    s = Fraction(0)
    sign = 1
    b %= a
    while b:
        s += sign * (Fraction(-1, 4) + Fraction(a * a + b * b + 1, 12 * a * b))
        a, b, sign = b, a % b, -sign
    return s


def dedekind_sum_direct(b: int, a: int) -> Fraction:
    """s(b, a) straight from the defining sawtooth sum (test oracle)."""
    if a < 1:
        raise ValueError(f"modulus must be positive, got a={a}")
    if gcd(a, b) != 1:
        raise ValueError(f"arguments must be coprime, got gcd({b}, {a}) = {gcd(a, b)}")
    return sum(
        sawtooth(Fraction(k, a)) * sawtooth(Fraction(k * b, a)) for k in range(1, a + 1)
    )


def stirling_first(n: int, m: int) -> int:
    """Signed Stirling number of the first kind: coefficient of x^m in
    x(x-1)...(x-n+1).  Returns 0 for m > n."""
    if n < 0 or m < 0:
        raise ValueError("Stirling indices must be non-negative")
    if m > n:
        return 0
    poly = [1]
    for j in range(n):
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] += c
            nxt[i] -= j * c
        poly = nxt
    return poly[m]


def gen_binomial(r, n: int) -> Fraction:
    """binom(r, n) = r(r-1)...(r-n+1)/n! for rational upper argument."""
    if n < 0:
        raise ValueError("lower argument must be non-negative")
    r = Fraction(r)
    out = Fraction(1)
    for i in range(n):
        out *= r - i
    return out / math.factorial(n)


def hurwitz_zeta_neg(k: int, z) -> Fraction:
    """zeta(1-k, z) = -B_k(z)/k for k >= 1 and 0 < z <= 1."""
    if k < 1:
        raise ValueError("k must be positive")
    z = Fraction(z)
    if not 0 < z <= 1:
        raise ValueError(f"need 0 < z <= 1, got {z}")
    return -bernoulli_poly(k, z) / k
