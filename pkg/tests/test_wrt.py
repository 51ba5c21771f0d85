import random
from fractions import Fraction

import gmpy2
import pytest
from gmpy2 import mpc, mpfr

from seifertwrt import (
    gauss_reciprocity_check,
    new_seifert,
    omega_identity_check,
    prefactor,
    tau_exact,
    workprec,
    wrt_via_eichler,
)
from tables import TABLE3_2357, last_place

PREC = 128


def _assert_matches_printed(value, printed_re, printed_im):
    tol_re = last_place(printed_re)
    tol_im = last_place(printed_im)
    dev_re = abs(value.real - mpfr(printed_re))
    dev_im = abs(value.imag - mpfr(printed_im))
    assert dev_re <= to_tol(tol_re), f"re {value.real} vs {printed_re}"
    assert dev_im <= to_tol(tol_im), f"im {value.imag} vs {printed_im}"


def to_tol(f: Fraction) -> mpfr:
    return mpfr(f.numerator) / f.denominator * mpfr("1.0000001")


def test_tau_rejects_small_order(s2357):
    with pytest.raises(ValueError):
        tau_exact(s2357, 2)


def test_exact_table_rows(s2357):
    with workprec(PREC):
        for level in (10, 11):
            got = tau_exact(s2357, level + 2, PREC)
            (re, im), _, _ = TABLE3_2357[level]
            _assert_matches_printed(got.z_level, re, im)


def test_exact_table5_row(s3457):
    with workprec(PREC):
        got = tau_exact(s3457, 1000, PREC)
        _assert_matches_printed(got.z_level, "170.573359", "-7.19243844")


def test_z_level_normalization(s2357):
    with workprec(PREC):
        v = tau_exact(s2357, 12, PREC)
        pi = gmpy2.const_pi()
        expected = v.tau_n * gmpy2.sin(pi / 12) / gmpy2.sqrt(mpfr(12) / 2)
        assert abs(v.z_level - expected) == 0


def test_term_count(s2357):
    v = tau_exact(s2357, 5, PREC)
    assert v.terms == 2 * s2357.P * 5 - 2 * s2357.P


def test_workers_bit_identical(s2357):
    a = tau_exact(s2357, 12, PREC, workers=1, chunk_size=512)
    b = tau_exact(s2357, 12, PREC, workers=3, chunk_size=512)
    assert a.tau_n == b.tau_n


def test_theta_limit_route_matches_exact_sum():
    with workprec(PREC):
        for p in ((2, 3, 5, 7), (3, 4, 5, 7), (2, 3, 5, 11)):
            s = new_seifert(p)
            for N in (3, 5):
                lhs = prefactor(s, N, PREC) * tau_exact(s, N, PREC).tau_n
                rhs = wrt_via_eichler(s, N, PREC)
                assert abs(lhs - rhs) < 1e-20


def test_omega_identity_examples():
    with workprec(PREC):
        lhs, rhs = omega_identity_check(2, 0, PREC)
        assert abs(lhs + Fraction(1, 4)) < 1e-30
        assert abs(rhs + Fraction(1, 4)) < 1e-30
        for N, k in ((3, 0), (7, 3)):
            lhs, rhs = omega_identity_check(N, k, PREC)
            assert abs(lhs - rhs) < 1e-25
        with pytest.raises(ValueError):
            omega_identity_check(5, 5, PREC)


def test_gauss_reciprocity_examples():
    with workprec(PREC):
        for N, M, k in ((2, 2, Fraction(0)), (4, 2, Fraction(1, 2)), (3, 4, Fraction(0))):
            lhs, rhs = gauss_reciprocity_check(N, M, k, PREC)
            assert abs(lhs - rhs) < 1e-25
        with pytest.raises(ValueError):
            gauss_reciprocity_check(3, 5, Fraction(0), PREC)
        with pytest.raises(ValueError):
            gauss_reciprocity_check(3, 4, Fraction(1, 2), PREC)


def test_gauss_reciprocity_negative_m():
    with workprec(PREC):
        rng = random.Random(3)
        for _ in range(8):
            N = rng.randint(1, 12)
            M = rng.choice([m for m in range(-12, 13) if m and (m * N) % 2 == 0])
            k = Fraction(rng.randint(-6, 6), N)
            lhs, rhs = gauss_reciprocity_check(N, M, k, PREC)
            assert abs(lhs - rhs) < 1e-25
