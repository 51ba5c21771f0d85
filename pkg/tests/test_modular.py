import itertools
from fractions import Fraction

import gmpy2
import pytest
from gmpy2 import mpc, mpfr

from seifertwrt import (
    canonical_multiindices,
    m_matrix_entry,
    new_seifert,
    phi_qseries,
    psi_qseries,
    s_matrix,
    s_matrix_entry,
    t_phase,
    workprec,
)
from seifertwrt.numeric import principal_power
from seifertwrt.periodic import apply_involution_pair

PREC = 128


def test_s_matrix_symmetric_real(s2357):
    reps = canonical_multiindices(s2357)
    with workprec(PREC):
        for a, b in itertools.product(reps, repeat=2):
            x = s_matrix_entry(s2357, a, b, PREC)
            y = s_matrix_entry(s2357, b, a, PREC)
            assert isinstance(x, mpfr)
            assert abs(x - y) < 1e-30


def test_s_matrix_squares_to_identity(s2357):
    with workprec(PREC):
        S = s_matrix(s2357, PREC)
        D = len(S)
        for i in range(D):
            for j in range(D):
                v = sum(S[i][k] * S[k][j] for k in range(D))
                assert abs(v - (1 if i == j else 0)) < 1e-20


def test_t_phase_cs_readoff(s2357):
    # minus half the phase exponent mod 1 carries the CS value
    e = t_phase(s2357, (1, 1, 2, 3)).exponent
    assert (-e / 2) % 1 == Fraction(839, 840)  # i.e. -1/840 mod 1
    e = t_phase(s2357, (1, 1, 1, 1)).exponent
    assert (-e / 2) % 1 == Fraction(311, 840)  # i.e. -529/840 mod 1


def test_t_phase_involution_invariant_mod2(s2357):
    for l in canonical_multiindices(s2357):
        e = t_phase(s2357, l).exponent
        for i, j in itertools.combinations(range(4), 2):
            e2 = t_phase(s2357, apply_involution_pair(s2357, l, i, j)).exponent
            assert (e - e2) % 2 == 0


def test_s_sign_exponent_integral_for_all_pairs(s2357, s3457):
    from seifertwrt.modular import _s_sign_exponent

    for s in (s2357, s3457):
        interior = list(itertools.product(*[range(1, pj) for pj in s.p]))
        for a in interior:
            for b in interior:
                _s_sign_exponent(s, a, b)  # raises if non-integral


def test_m_matrix():
    with workprec(PREC):
        assert abs(m_matrix_entry(2, 1, 1, PREC) - 1) < 1e-30
        for P in (5, 12):
            M = [[m_matrix_entry(P, a, b, PREC) for b in range(1, P)] for a in range(1, P)]
            for i in range(P - 1):
                for j in range(P - 1):
                    assert abs(M[i][j] - M[j][i]) < 1e-30
                    v = sum(M[i][k] * M[k][j] for k in range(P - 1))
                    assert abs(v - (1 if i == j else 0)) < 1e-20


def test_qseries_rejects_lower_half(s2357):
    with pytest.raises(ValueError):
        phi_qseries(s2357, (1, 1, 1, 1), mpc(0, -1), PREC)
    with pytest.raises(ValueError):
        psi_qseries(6, 1, 0.5, PREC)


def _phi_s_law_dev(s, l, tau):
    reps = canonical_multiindices(s)
    lhs = phi_qseries(s, l, tau, PREC)
    rhs = gmpy2.sqrt(mpc(0, 1) / tau) * sum(
        s_matrix_entry(s, l, l2, PREC) * phi_qseries(s, l2, -1 / tau, PREC) for l2 in reps
    )
    return abs(lhs - rhs)


def _phi_t_law_dev(s, l, tau):
    lhs = phi_qseries(s, l, tau + 1, PREC)
    rhs = t_phase(s, l).value(PREC) * phi_qseries(s, l, tau, PREC)
    return abs(lhs - rhs)


def _psi_s_law_dev(P, a, tau):
    lhs = psi_qseries(P, a, tau, PREC)
    rhs = principal_power(mpc(0, 1) / tau, Fraction(3, 2)) * sum(
        m_matrix_entry(P, a, b, PREC) * psi_qseries(P, b, -1 / tau, PREC)
        for b in range(1, P)
    )
    return abs(lhs - rhs)


def test_phi_transformation_laws(s2357):
    with workprec(PREC):
        tau = mpc(0, 1)
        assert _phi_s_law_dev(s2357, (1, 1, 2, 2), tau) < 1e-15
        assert _phi_t_law_dev(s2357, (1, 1, 2, 2), mpc(0, 1) / 3) < 1e-15


def test_psi_transformation_laws_small_p():
    with workprec(PREC):
        for P in (2, 5, 12):
            for a in range(1, min(P, 4)):
                assert _psi_s_law_dev(P, a, mpc(0, 1)) < 1e-15
                lhs = psi_qseries(P, a, mpc(0, 1) + 1, PREC)
                rhs = gmpy2.exp(mpc(0, 1) * gmpy2.const_pi() * a * a / (2 * P)) * psi_qseries(
                    P, a, mpc(0, 1), PREC
                )
                assert abs(lhs - rhs) < 1e-15
