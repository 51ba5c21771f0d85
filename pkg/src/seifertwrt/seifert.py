"""Manifold descriptor for Seifert homology spheres with pairwise-coprime
exceptional fibers, the normalization constant attached to the surgery
presentation, and the surgery coefficients q_j.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Sequence, Tuple

from .exactmath import dedekind_sum

__all__ = ["SeifertData", "SurgeryData", "new_seifert", "phi", "solve_q", "parse_fibers"]


@dataclass(frozen=True)
class SeifertData:
    """Validated fiber data: exponents p_j, their product P, and (for the
    3- and 4-fiber cases) the framing constant phi."""

    p: Tuple[int, ...]
    P: int = field(compare=False)
    phi: Fraction | None = field(compare=False)

    @property
    def fiber_count(self) -> int:
        return len(self.p)

    def __str__(self) -> str:
        return "Sigma(" + ",".join(str(pj) for pj in self.p) + ")"


@dataclass(frozen=True)
class SurgeryData:
    """Integer surgery coefficients with P * sum(q_j / p_j) = 1."""

    q: Tuple[int, ...]


def new_seifert(p: Sequence[int]) -> SeifertData:
    """Build a descriptor from fiber exponents, rejecting bad input.

    Requires 2 to 5 fibers, each >= 2 and pairwise coprime.  The full
    invariant pipeline needs 4 fibers (3 for the companion convention); 2
    and 5 are accepted for the lattice-point conjecture checker only.
    """
    p = tuple(int(x) for x in p)
    if not 2 <= len(p) <= 5:
        raise ValueError(f"need between 2 and 5 fibers, got {len(p)}")
    for pj in p:
        if pj < 2:
            raise ValueError(f"fiber exponents must be at least 2, got {pj}")
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if gcd(p[i], p[j]) != 1:
                raise ValueError(
                    f"fiber exponents must be pairwise coprime: "
                    f"gcd({p[i]}, {p[j]}) = {gcd(p[i], p[j])}"
                )
    P = math.prod(p)
    ph = _phi_from_scratch(p) if len(p) in (3, 4) else None
    return SeifertData(p=p, P=P, phi=ph)


def _phi_from_scratch(p: Tuple[int, ...]) -> Fraction:
    P = math.prod(p)
    return 3 - Fraction(1, P) + 12 * sum(dedekind_sum(P // pj, pj) for pj in p)


def phi(s: SeifertData, *, three_fiber: bool = False) -> Fraction:
    """The constant 3 - 1/P + 12*sum_j s(P/p_j, p_j).

    Defined for 4 fibers.  The 3-fiber analogue (same shape, three
    summands) follows the convention of the companion 3-fiber pipeline and
    must be requested explicitly via ``three_fiber=True``.
    """
    if s.fiber_count == 4:
        return _phi_from_scratch(s.p)
    if s.fiber_count == 3:
        if not three_fiber:
            raise ValueError(
                "phi for 3 fibers follows the companion convention; "
                "pass three_fiber=True to opt in"
            )
        return _phi_from_scratch(s.p)
    raise ValueError(f"phi is defined for 3 or 4 fibers, not {s.fiber_count}")


def solve_q(s: SeifertData) -> SurgeryData:
    """Surgery coefficients q_j with sum_j q_j * (P/p_j) = 1.

    Each residue q_j mod p_j is forced to the inverse of P/p_j; we pick the
    absolutely smallest representative per fiber, then shift the last
    fiber's coefficient by a multiple of its exponent to land exactly on 1.
    The output is therefore deterministic.
    """
    P = s.P
    q = []
    for pj in s.p:
        r = pow(P // pj, -1, pj)
        if 2 * r > pj:
            r -= pj
        q.append(r)
    total = sum(qj * (P // pj) for qj, pj in zip(q, s.p))
    m, rem = divmod(total - 1, P)
    if rem:
        raise AssertionError("per-fiber residues do not solve the identity mod P")
    q[-1] -= m * s.p[-1]
    return SurgeryData(q=tuple(q))


def parse_fibers(text: str) -> SeifertData:
    """Parse a comma-separated fiber tuple such as '2,3,5,7'."""
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"could not parse fiber list {text!r}") from None
    return new_seifert(parts)
