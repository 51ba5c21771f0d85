"""Topological byproducts of the expansion: simplex lattice-point counts,
the closed-form count of surviving leading terms, the Casson invariant,
Chern-Simons values, representation tables, the finite-type invariant
ladder, and the general-fiber-count lattice conjecture checker.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .asymptotic import t_series
from .eichler import c_p
from .exactmath import bernoulli_poly, dedekind_sum, gen_binomial, stirling_first
from .periodic import MultiIndex, canonical_multiindices, chi
from .seifert import SeifertData, new_seifert, phi as seifert_phi

__all__ = [
    "RepClass",
    "InvariantReport",
    "ConjectureReport",
    "lattice_count",
    "gamma_closed",
    "casson",
    "cs_invariant",
    "rep_table",
    "ohtsuki",
    "conjecture_check",
    "explicit_gamma_check",
    "invariant_report",
]


@dataclass(frozen=True)
class RepClass:
    """A row of the representation tables: the label, its weighted fiber
    sum, the period-mean coefficient (None for one-zero labels), and the
    Chern-Simons value in (-1, 0]."""

    l: MultiIndex
    sum_l_over_p: Fraction
    c_value: Fraction | None
    cs: Fraction


@dataclass(frozen=True)
class InvariantReport:
    D: int
    gamma: int
    lattice_points: int
    phi: Fraction
    casson: Fraction
    ohtsuki: List[Fraction]


@dataclass(frozen=True)
class ConjectureReport:
    p: Tuple[int, ...]
    D: int
    gamma_count: int
    lattice_points: int
    holds: bool


def lattice_count(s: SeifertData) -> int:
    """Interior labels with 0 < sum_j l_j/p_j < 1: lattice points strictly
    inside the simplex with vertices p_j*e_j and the origin."""
    P = s.P
    w = [P // pj for pj in s.p]
    count = 0

    def rec(i: int, partial: int) -> None:
        nonlocal count
        if i == len(s.p) - 1:
            if partial < P:
                count += min(s.p[i] - 1, (P - partial - 1) // w[i])
            return
        for lj in range(1, s.p[i]):
            t = partial + lj * w[i]
            if t >= P:
                break
            rec(i + 1, t)

    rec(0, 0)
    return count


def gamma_closed(s: SeifertData) -> int:
    """Closed form (Mordell-style, through Dedekind sums) for the number of
    canonical labels whose leading amplitude survives; checked to be a
    non-negative integer before returning."""
    if s.fiber_count != 4:
        raise ValueError("the closed-form count needs 4 fibers")
    p, P = s.p, s.P
    g = Fraction(-3, 8) + Fraction(P, 12)
    g -= Fraction(P, 24) * sum(Fraction(1 + pj, pj * pj) for pj in p)
    g -= Fraction(1 - sum(p), 24 * P)
    g += Fraction(P, 24) * sum(
        Fraction(1, p[j] ** 2 * p[k]) for j in range(4) for k in range(4) if j != k
    )
    g += Fraction(1, 2) * sum(dedekind_sum(P // pj, pj) for pj in p)
    g -= Fraction(1, 2) * sum(
        dedekind_sum(P // (p[j] * p[k]), p[j]) for j in range(4) for k in range(4) if j != k
    )
    if g.denominator != 1 or g < 0:
        raise AssertionError(f"closed-form count came out as {g}, not a non-negative integer")
    return int(g)


def casson(p: Sequence[int]) -> Fraction:
    """Casson invariant of the homology sphere with the given 3 or 4
    pairwise-coprime fiber exponents."""
    p = tuple(int(x) for x in p)
    if len(p) not in (3, 4):
        raise ValueError(f"Casson invariant implemented for 3 or 4 fibers, got {len(p)}")
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if gcd(p[i], p[j]) != 1:
                raise ValueError(f"fibers must be pairwise coprime: gcd({p[i]}, {p[j]}) != 1")
    M = len(p)
    P = math.prod(p)
    lam = Fraction(-1, 8)
    lam += Fraction(1 + sum((P // pj) ** 2 for pj in p) - (M - 2) * P * P, 24 * P)
    lam -= Fraction(1, 2) * sum(dedekind_sum(P // pj, pj) for pj in p)
    return lam


def cs_invariant(s: SeifertData, l: Sequence[int]) -> Fraction:
    """-(P/4)(1 + sum_j l_j/p_j)^2 mod 1, represented in (-1, 0].

    Accepts labels with at most one zero entry (the rows of the
    missing-representation table)."""
    l = tuple(l)
    if len(l) != s.fiber_count:
        raise ValueError(f"label length {len(l)} does not match {s.fiber_count} fibers")
    zeros = sum(1 for lj in l if lj == 0)
    if zeros > 1:
        raise ValueError("at most one zero entry is allowed")
    for lj, pj in zip(l, s.p):
        if not 0 <= lj < pj:
            raise ValueError(f"label entry {lj} outside [0, {pj})")
    x = -Fraction(s.P, 4) * (1 + sum(Fraction(lj, pj) for lj, pj in zip(l, s.p))) ** 2
    return x - math.ceil(x)


def _triple_b1_survives(p3: Tuple[int, ...], l3: MultiIndex) -> bool:
    # 3-fiber analogue of the period-mean criterion, with B_1 weights
    s3 = new_seifert(p3)
    f = chi(s3, l3)
    twoP = 2 * s3.P
    total = Fraction(0)
    for r, v in f.nonzero():
        n = r if r > 0 else twoP
        total += v * bernoulli_poly(1, Fraction(n, twoP))
    return total != 0


def rep_table(s: SeifertData) -> Tuple[List[RepClass], List[RepClass]]:
    """Two row lists: canonical interior labels (with period-mean
    coefficient and Chern-Simons value), and the one-zero labels whose
    retained triple survives the 3-fiber B_1 criterion.

    Missing-row sections run over the omitted fiber from last to first,
    rows ordered lexicographically inside each section.
    """
    if s.fiber_count != 4:
        raise ValueError("representation tables need 4 fibers")
    interior = []
    for l in canonical_multiindices(s):
        interior.append(
            RepClass(
                l=l,
                sum_l_over_p=sum(Fraction(lj, pj) for lj, pj in zip(l, s.p)),
                c_value=c_p(s, l),
                cs=cs_invariant(s, l),
            )
        )
    missing = []
    for zero_pos in range(s.fiber_count - 1, -1, -1):
        p3 = tuple(pj for i, pj in enumerate(s.p) if i != zero_pos)
        s3 = new_seifert(p3)
        for l3 in canonical_multiindices(s3):
            if _triple_b1_survives(p3, l3):
                l = list(l3)
                l.insert(zero_pos, 0)
                l = tuple(l)
                missing.append(
                    RepClass(
                        l=l,
                        sum_l_over_p=sum(Fraction(lj, pj) for lj, pj in zip(l, s.p)),
                        c_value=None,
                        cs=cs_invariant(s, l),
                    )
                )
    return interior, missing


def ohtsuki(s: SeifertData, n_max: int) -> List[Fraction]:
    """The finite-type invariant ladder lambda_0..lambda_n_max from the
    tail series, Stirling numbers, and a rational-argument binomial."""
    if s.fiber_count != 4:
        raise ValueError("the invariant ladder needs 4 fibers")
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    P = s.P
    ph = seifert_phi(s)
    tails = [t_series(s, k) for k in range(n_max + 2)]
    out = []
    for n in range(n_max + 1):
        total = Fraction(0)
        for j in range(n + 1):
            inner = Fraction(0)
            for k in range(1, j + 2):
                inner += (
                    tails[k]
                    / Fraction(4 * P) ** k
                    * stirling_first(j + 1, k)
                    / math.factorial(j + 1)
                )
            total += gen_binomial((2 - ph) / 4, n - j) * inner
        out.append(total)
    return out


def conjecture_check(p: Sequence[int]) -> ConjectureReport:
    """Desk-scale check that the count of canonical labels with vanishing
    B_{M-2}-weighted period mean equals the simplex lattice-point count."""
    s = new_seifert(p)
    if s.P > 10 ** 5:
        raise ValueError(f"conjecture checker is capped at product 1e5, got {s.P}")
    M = s.fiber_count
    twoP = 2 * s.P
    reps = canonical_multiindices(s)
    gamma_count = 0
    for l in reps:
        f = chi(s, l)
        total = Fraction(0)
        for r, v in f.nonzero():
            n = r if r > 0 else twoP
            total += v * bernoulli_poly(M - 2, Fraction(n, twoP))
        if total != 0:
            gamma_count += 1
    lat = lattice_count(s)
    return ConjectureReport(
        p=s.p,
        D=len(reps),
        gamma_count=gamma_count,
        lattice_points=lat,
        holds=len(reps) - gamma_count == lat,
    )


def explicit_gamma_check(p: Sequence[int]) -> bool:
    """Verify the inclusion-exclusion identity expressing the surviving-term
    count through the Casson invariants of the four fiber triples and of the
    manifold itself."""
    s = new_seifert(p)
    if s.fiber_count != 4:
        raise ValueError("the identity needs 4 fibers")
    total = -casson(s.p)
    for i in range(4):
        total += casson(tuple(pj for j, pj in enumerate(s.p) if j != i))
    return total == gamma_closed(s)


def invariant_report(s: SeifertData, n_max: int = 3) -> InvariantReport:
    reps = canonical_multiindices(s)
    return InvariantReport(
        D=len(reps),
        gamma=gamma_closed(s),
        lattice_points=lattice_count(s),
        phi=seifert_phi(s),
        casson=casson(s.p),
        ohtsuki=ohtsuki(s, n_max),
    )
