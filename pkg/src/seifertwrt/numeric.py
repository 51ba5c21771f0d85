"""Multiprecision plumbing shared by the floating-point evaluators.

All transcendental evaluation in this package runs on gmpy2's MPFR/MPC
types under an explicit binary precision.  Functions here never touch the
global context; callers open a context with :func:`workprec` and every
value produced inside keeps the precision it was computed at.
"""
from __future__ import annotations

from fractions import Fraction

import gmpy2
from gmpy2 import mpc, mpfr

DEFAULT_PRECISION = 128
MIN_PRECISION = 64

__all__ = [
    "DEFAULT_PRECISION",
    "MIN_PRECISION",
    "workprec",
    "to_mpfr",
    "exp_pi_i",
    "principal_power",
]


def workprec(bits: int):
    """A gmpy2 context manager at ``bits`` of working precision."""
    if bits < MIN_PRECISION:
        raise ValueError(f"precision must be at least {MIN_PRECISION} bits, got {bits}")
    return gmpy2.context(precision=bits)


def to_mpfr(x) -> mpfr:
    """Convert int/Fraction/float/mpfr to mpfr at the current precision."""
    if isinstance(x, Fraction):
        return mpfr(x.numerator) / mpfr(x.denominator)
    return mpfr(x)


def exp_pi_i(x) -> mpc:
    """exp(pi*i*x).  Exact Fraction arguments are reduced mod 2 first so the
    phase of a huge rational exponent never loses accuracy."""
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        x = x % 2
        arg = gmpy2.const_pi() * to_mpfr(x)
    else:
        arg = gmpy2.const_pi() * mpfr(x)
    return mpc(gmpy2.cos(arg), gmpy2.sin(arg))


def principal_power(z: mpc, exponent) -> mpc:
    """Principal branch of z**exponent for nonzero complex z."""
    return gmpy2.exp(to_mpfr(exponent) * gmpy2.log(mpc(z)))
