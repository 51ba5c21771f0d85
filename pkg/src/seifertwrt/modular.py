"""Transformation data of the two families of vector-valued forms: the S
and T matrices for the weight-1/2 family labelled by multi-indices, the M
matrix for the weight-3/2 family, and truncated q-series used to verify the
transformation laws numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List

import gmpy2
from gmpy2 import mpc, mpfr

from .numeric import DEFAULT_PRECISION, exp_pi_i, workprec
from .periodic import MultiIndex, SignedPeriodicFunction, _check_interior, canonical_multiindices, chi, psi
from .seifert import SeifertData

__all__ = [
    "TPhase",
    "t_phase",
    "s_matrix_entry",
    "s_matrix",
    "m_matrix_entry",
    "phi_qseries",
    "psi_qseries",
]


@dataclass(frozen=True)
class TPhase:
    """Phase exp(pi*i*exponent) with the exponent kept exact, reduced mod 2."""

    exponent: Fraction

    def value(self, precision: int = DEFAULT_PRECISION) -> mpc:
        with workprec(precision):
            return exp_pi_i(self.exponent)


def t_phase(s: SeifertData, l: MultiIndex) -> TPhase:
    """Diagonal T-matrix entry: exponent (P/2)(1 + sum_j l_j/p_j)^2 mod 2."""
    _check_interior(s, l)
    x = 1 + sum(Fraction(lj, pj) for lj, pj in zip(l, s.p))
    return TPhase(exponent=(Fraction(s.P, 2) * x * x) % 2)


def _s_sign_exponent(s: SeifertData, l: MultiIndex, l2: MultiIndex) -> int:
    M = s.fiber_count
    e = Fraction(s.P) * (1 + sum(Fraction(a + b, pj) for a, b, pj in zip(l, l2, s.p)))
    e += s.P * sum(
        Fraction(l[j] * l2[k], s.p[j] * s.p[k]) for j in range(M) for k in range(M) if j != k
    )
    if e.denominator != 1:
        raise ValueError(f"S-matrix sign exponent {e} is not an integer for {l}, {l2}")
    return int(e)


def s_matrix_entry(
    s: SeifertData, l: MultiIndex, l2: MultiIndex, precision: int = DEFAULT_PRECISION
) -> mpfr:
    """Real S-matrix entry
    (16/sqrt(2P)) * (-1)^E * prod_j sin(P l_j l2_j pi / p_j^2),
    where the integrality of the sign exponent E is checked."""
    _check_interior(s, l)
    _check_interior(s, l2)
    sign = -1 if _s_sign_exponent(s, l, l2) % 2 else 1
    with workprec(precision):
        pi = gmpy2.const_pi()
        amp = mpfr(16) / gmpy2.sqrt(mpfr(2 * s.P))
        for lj, l2j, pj in zip(l, l2, s.p):
            amp *= gmpy2.sin(pi * s.P * lj * l2j / (pj * pj))
        return sign * amp


def s_matrix(s: SeifertData, precision: int = DEFAULT_PRECISION) -> List[List[mpfr]]:
    """The full S matrix over the canonical label ordering."""
    reps = canonical_multiindices(s)
    return [[s_matrix_entry(s, a, b, precision) for b in reps] for a in reps]


def m_matrix_entry(P: int, a: int, b: int, precision: int = DEFAULT_PRECISION) -> mpfr:
    """sqrt(2/P) * sin(ab*pi/P) for 0 < a, b < P."""
    if not (0 < a < P and 0 < b < P):
        raise ValueError(f"need 0 < a, b < P, got a={a}, b={b}, P={P}")
    with workprec(precision):
        pi = gmpy2.const_pi()
        return gmpy2.sqrt(mpfr(2) / P) * gmpy2.sin(pi * a * b / P)


def _qseries_cutoff(P: int, im_tau: float, precision: int) -> int:
    # smallest n with exp(-pi*Im(tau)*n^2/(2P)) < 2^-(precision+8): the
    # dropped Gaussian tail then sits below the working precision.
    n2 = 2 * P * (precision + 8) * math.log(2) / (math.pi * im_tau)
    return math.isqrt(int(n2)) + 1


def _theta_sum(
    f: SignedPeriodicFunction, P: int, tau, precision: int, weight_n: bool
) -> mpc:
    tau = mpc(tau)
    if not tau.imag > 0:
        raise ValueError(f"tau must lie in the upper half plane, got {tau}")
    cutoff = _qseries_cutoff(P, float(tau.imag), precision)
    pi = gmpy2.const_pi()
    total = mpc(0)
    for r, v in f.nonzero():
        for start, step in ((r, 2 * P), (r - 2 * P, -2 * P)):
            n = start
            while abs(n) <= cutoff:
                w = gmpy2.exp(mpc(0, 1) * pi * tau * n * n / (2 * P))
                total += (v * n if weight_n else v) * w
                n += step
    return total / 2


def phi_qseries(
    s: SeifertData, l: MultiIndex, tau, precision: int = DEFAULT_PRECISION, cutoff=None
) -> mpc:
    """(1/2) sum_n chi(n) q^{n^2/4P} truncated so the Gaussian tail is below
    the target precision (``cutoff`` overrides the automatic bound)."""
    f = chi(s, l)
    with workprec(precision):
        if cutoff is not None:
            return _theta_partial(f, s.P, tau, cutoff, weight_n=False)
        return _theta_sum(f, s.P, tau, precision, weight_n=False)


def psi_qseries(P: int, a: int, tau, precision: int = DEFAULT_PRECISION, cutoff=None) -> mpc:
    """(1/2) sum_n n psi(n) q^{n^2/4P}, truncated like :func:`phi_qseries`."""
    f = psi(P, a)
    with workprec(precision):
        if cutoff is not None:
            return _theta_partial(f, P, tau, cutoff, weight_n=True)
        return _theta_sum(f, P, tau, precision, weight_n=True)


def _theta_partial(f: SignedPeriodicFunction, P: int, tau, cutoff: int, weight_n: bool) -> mpc:
    tau = mpc(tau)
    if not tau.imag > 0:
        raise ValueError(f"tau must lie in the upper half plane, got {tau}")
    pi = gmpy2.const_pi()
    total = mpc(0)
    for n in range(-cutoff, cutoff + 1):
        v = f(n)
        if v:
            w = gmpy2.exp(mpc(0, 1) * pi * tau * n * n / (2 * P))
            total += (v * n if weight_n else v) * w
    return total / 2
