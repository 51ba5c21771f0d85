"""Limiting values of the two partial theta series at rational points.

At a rational M/N both limits collapse to finite Bernoulli-weighted sums of
roots of unity, which is the definition of record here; the q-series radial
limit is used only as a test oracle.  At integers the sums collapse further
to closed forms driven by the exact period-mean coefficients computed in
:func:`c_p`.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from gmpy2 import mpc

from .exactmath import bernoulli_poly
from .numeric import DEFAULT_PRECISION, exp_pi_i, to_mpfr, workprec
from .periodic import MultiIndex, _check_interior, chi, psi
from .seifert import SeifertData

__all__ = [
    "RationalPoint",
    "c_p",
    "c_p_classified",
    "eichler_phi_limit",
    "eichler_psi_limit",
]


@dataclass(frozen=True)
class RationalPoint:
    """A reduced rational m/n with positive denominator."""

    m: int
    n: int

    def __post_init__(self):
        if self.n <= 0:
            raise ValueError(f"denominator must be positive, got {self.n}")
        if gcd(self.m, self.n) != 1:
            raise ValueError(f"{self.m}/{self.n} is not reduced")

    @classmethod
    def from_value(cls, x) -> "RationalPoint":
        if isinstance(x, RationalPoint):
            return x
        f = Fraction(x)
        return cls(f.numerator, f.denominator)


def c_p(s: SeifertData, l: MultiIndex) -> Fraction:
    """sum_{n=1}^{2P} chi(n) B_2(n/2P), exact.

    This is the coefficient controlling whether the weight-1/2 partial
    theta series survives the limit to an integer point.
    """
    if s.fiber_count != 4:
        raise ValueError("c_p is defined for 4 fibers")
    f = chi(s, l)
    twoP = 2 * s.P
    total = Fraction(0)
    for r, v in f.nonzero():
        n = r if r > 0 else twoP
        total += v * bernoulli_poly(2, Fraction(n, twoP))
    return total


def c_p_classified(s: SeifertData, l: MultiIndex) -> Fraction:
    """The same coefficient by case analysis on the sixteen affine
    combinations 1 + sum_j eps_j l_j/p_j, without touching chi.

    The sign-alternating B_2 sum over all sixteen combinations vanishes
    identically (B_2 has degree two, the weights kill degree below four),
    so only the period-shift corrections survive.  Classifying each signed
    sum y by how far 1 + y sits outside (0, 2) gives 2(y - 1) per unit
    shift and 4(y - 2) for the double shift; on generic positions this
    collapses to the familiar piecewise values 0, 2(t - 1), 4 l_a/p_a,
    2(1 + l_a/p_a + l_b/p_b - l_c/p_c - l_d/p_d) and 4(1 - l_d/p_d).
    """
    if s.fiber_count != 4:
        raise ValueError("c_p_classified is defined for 4 fibers")
    _check_interior(s, l)
    x = [Fraction(lj, pj) for lj, pj in zip(l, s.p)]
    total = Fraction(0)
    for eps in itertools.product((1, -1), repeat=4):
        y = sum(e * xi for e, xi in zip(eps, x))
        if 1 < y < 3:
            total += 2 * math.prod(eps) * (y - 1)
        elif y > 3:
            total += 4 * math.prod(eps) * (y - 2)
    return total


def _phase_root(two_pn: int) -> mpc:
    """Primitive root exp(pi*i/two_pn); powers of it carry every phase in
    the limit sums, avoiding per-term transcendental calls."""
    return exp_pi_i(Fraction(1, two_pn))


def eichler_phi_limit(
    s: SeifertData, l: MultiIndex, tau, precision: int = DEFAULT_PRECISION
) -> mpc:
    """Limiting value of the weight-1/2 partial theta series at tau = m/n:
    -P*n * sum_{k=1}^{2Pn} chi(k) e^{pi i (m/n) k^2/2P} B_2(k/(2Pn))."""
    pt = RationalPoint.from_value(tau)
    f = chi(s, l)
    P = s.P
    two_pn = 2 * P * pt.n
    with workprec(precision):
        w = _phase_root(two_pn)
        total = mpc(0)
        for r, v in f.nonzero():
            for t in range(pt.n):
                k = (r if r > 0 else 2 * P) + 2 * P * t
                if k > two_pn:
                    continue
                ph = w ** ((pt.m * k * k) % (2 * two_pn))
                total += v * to_mpfr(bernoulli_poly(2, Fraction(k, two_pn))) * ph
        return -P * pt.n * total


def eichler_psi_limit(P: int, a: int, tau, precision: int = DEFAULT_PRECISION) -> mpc:
    """Limiting value of the weight-3/2 partial theta series at tau = m/n:
    -sum_{k=0}^{2Pn} psi(k) e^{pi i (m/n) k^2/2P} B_1(k/(2Pn))."""
    f = psi(P, a)
    pt = RationalPoint.from_value(tau)
    two_pn = 2 * P * pt.n
    with workprec(precision):
        w = _phase_root(two_pn)
        total = mpc(0)
        for r, v in f.nonzero():
            for t in range(pt.n):
                k = r + 2 * P * t
                if k > two_pn:
                    continue
                ph = w ** ((pt.m * k * k) % (2 * two_pn))
                total += v * to_mpfr(bernoulli_poly(1, Fraction(k, two_pn))) * ph
        return -total
