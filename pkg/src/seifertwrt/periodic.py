"""Sign-valued periodic functions of period 2P attached to a fiber tuple,
the involution action on their labels, canonical label enumeration, and the
Laurent generating polynomial used as an independent oracle.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Tuple

from .seifert import SeifertData

__all__ = [
    "MultiIndex",
    "SignedPeriodicFunction",
    "chi",
    "psi",
    "apply_involution",
    "apply_involution_pair",
    "orbit",
    "canonical_multiindices",
    "expand_generating_poly",
]

MultiIndex = Tuple[int, ...]


@dataclass(frozen=True)
class SignedPeriodicFunction:
    """A periodic function supported on finitely many residues per period.

    ``support`` maps residues in [0, modulus) to nonzero integer values
    (always +-1 for the functions built here); everything else is 0.
    """

    modulus: int
    support: Dict[int, int]
    parity: str  # "even" | "odd"

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if sum(self.support.values()) != 0:
            raise ValueError("periodic function must have mean value zero")
        sgn = 1 if self.parity == "even" else -1
        for r, v in self.support.items():
            if not 0 <= r < self.modulus:
                raise ValueError(f"support residue {r} outside [0, {self.modulus})")
            if self.support.get((self.modulus - r) % self.modulus, 0) != sgn * v:
                raise ValueError(f"declared {self.parity} parity violated at n={r}")

    def __call__(self, n: int) -> int:
        return self.support.get(n % self.modulus, 0)

    def nonzero(self) -> Iterator[Tuple[int, int]]:
        """(residue, value) pairs in increasing residue order."""
        return iter(sorted(self.support.items()))


def _check_interior(s: SeifertData, l: MultiIndex) -> None:
    if len(l) != s.fiber_count:
        raise ValueError(f"index length {len(l)} does not match {s.fiber_count} fibers")
    for lj, pj in zip(l, s.p):
        if not 0 < lj < pj:
            raise ValueError(f"index entry {lj} outside (0, {pj})")


def chi(s: SeifertData, l: MultiIndex) -> SignedPeriodicFunction:
    """The sign-valued function of period 2P supported at the residues
    P(1 + sum_j eps_j l_j/p_j) with value -prod_j eps_j, over all sign
    vectors eps.  Even for an even fiber count, odd otherwise.

    Coinciding residues are summed (they cannot occur for interior labels
    of pairwise-coprime fibers, but the construction stays well defined).
    """
    _check_interior(s, l)
    P, M = s.P, s.fiber_count
    support: Dict[int, int] = {}
    for eps in itertools.product((1, -1), repeat=M):
        r = P + sum(e * lj * (P // pj) for e, lj, pj in zip(eps, l, s.p))
        r %= 2 * P
        support[r] = support.get(r, 0) - math.prod(eps)
    support = {r: v for r, v in support.items() if v}
    return SignedPeriodicFunction(
        modulus=2 * P, support=support, parity="even" if M % 2 == 0 else "odd"
    )


def psi(P: int, a: int) -> SignedPeriodicFunction:
    """The odd function of period 2P with value +1 at a and -1 at 2P - a."""
    if not 0 < a < P:
        raise ValueError(f"need 0 < a < P, got a={a}, P={P}")
    return SignedPeriodicFunction(modulus=2 * P, support={a: 1, 2 * P - a: -1}, parity="odd")


def apply_involution(s: SeifertData, l: MultiIndex, i: int) -> MultiIndex:
    """Replace l_i by p_i - l_i (fiber indices count from 0)."""
    if not 0 <= i < s.fiber_count:
        raise ValueError(f"fiber index {i} out of range")
    out = list(l)
    out[i] = s.p[i] - out[i]
    return tuple(out)


def apply_involution_pair(s: SeifertData, l: MultiIndex, i: int, j: int) -> MultiIndex:
    if i == j:
        raise ValueError("involution pair needs two distinct fibers")
    return apply_involution(s, apply_involution(s, l, i), j)


def _even_flip_sets(M: int) -> List[Tuple[int, ...]]:
    return [c for r in range(0, M + 1, 2) for c in itertools.combinations(range(M), r)]


def orbit(s: SeifertData, l: MultiIndex) -> List[MultiIndex]:
    """The orbit of l under the group generated by the paired involutions,
    i.e. all even-size sets of fiber flips.  Sorted lexicographically."""
    out = set()
    for flips in _even_flip_sets(s.fiber_count):
        ll = list(l)
        for i in flips:
            ll[i] = s.p[i] - ll[i]
        out.add(tuple(ll))
    return sorted(out)


def canonical_multiindices(s: SeifertData) -> List[MultiIndex]:
    """One representative (the lexicographic minimum) per involution orbit
    of the interior labels.  Exactly prod(p_j - 1)/2^(M-1) of them, in
    lexicographic order."""
    flips = _even_flip_sets(s.fiber_count)
    reps = []
    for l in itertools.product(*[range(1, pj) for pj in s.p]):
        smallest = True
        for f in flips:
            if not f:
                continue
            ll = list(l)
            for i in f:
                ll[i] = s.p[i] - ll[i]
            if tuple(ll) < l:
                smallest = False
                break
        if smallest:
            reps.append(l)
    return reps


def expand_generating_poly(s: SeifertData) -> List[int]:
    """Coefficients over one period of the Laurent polynomial
    -z^P prod_j (z^{P/p_j} - z^{-P/p_j}), exponents reduced mod 2P, plus the
    two-factor correction term that enters when sum_j 1/p_j > 1.

    Equals the support of chi at the all-ones label; used as an oracle.
    """
    if s.fiber_count != 4:
        raise ValueError("generating polynomial oracle is for 4 fibers")
    P = s.P
    terms: Dict[int, int] = {P: -1}
    for pj in s.p:
        nxt: Dict[int, int] = {}
        for e, c in terms.items():
            for de, dc in ((P // pj, 1), (-(P // pj), -1)):
                nxt[e + de] = nxt.get(e + de, 0) + c * dc
        terms = nxt
    excess = sum(Fraction(1, pj) for pj in s.p) - 1
    if excess > 0:
        d = int(P * excess)
        for e1, c1 in ((P, 1), (-P, -1)):
            for e2, c2 in ((d, 1), (-d, -1)):
                e = P + e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
    out = [0] * (2 * P)
    for e, c in terms.items():
        out[e % (2 * P)] += c
    return out
