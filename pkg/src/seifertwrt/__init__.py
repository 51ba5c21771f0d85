"""Exact and asymptotic SU(2) quantum invariants of Seifert homology
spheres with three or four exceptional fibers, plus the exact-rational
topological invariants carried along by the expansion."""

from .asymptotic import (
    AsymptoticExpansion,
    full_asymptotic,
    t_series,
    t_series_via_l,
    t_series_via_sinh,
    witten_normalize,
    z0,
    z1,
)
from .eichler import RationalPoint, c_p, c_p_classified, eichler_phi_limit, eichler_psi_limit
from .exactmath import (
    bernoulli_number,
    bernoulli_poly,
    dedekind_sum,
    dedekind_sum_direct,
    gen_binomial,
    hurwitz_zeta_neg,
    sawtooth,
    stirling_first,
)
from .modular import m_matrix_entry, phi_qseries, psi_qseries, s_matrix, s_matrix_entry, t_phase
from .numeric import DEFAULT_PRECISION, workprec
from .periodic import (
    SignedPeriodicFunction,
    apply_involution,
    apply_involution_pair,
    canonical_multiindices,
    chi,
    expand_generating_poly,
    orbit,
    psi,
)
from .seifert import SeifertData, SurgeryData, new_seifert, parse_fibers, phi, solve_q
from .topology import (
    ConjectureReport,
    InvariantReport,
    RepClass,
    casson,
    conjecture_check,
    cs_invariant,
    explicit_gamma_check,
    gamma_closed,
    invariant_report,
    lattice_count,
    ohtsuki,
    rep_table,
)
from .wrt import (
    WrtValue,
    gauss_reciprocity_check,
    omega_identity_check,
    prefactor,
    tau_exact,
    wrt_via_eichler,
)

__version__ = "0.1.0"
