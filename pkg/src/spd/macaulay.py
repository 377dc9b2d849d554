"""Binomial decompositions of Hilbert-function values and minimal-growth bounds.

Any Q >= 1 has a unique expansion Q = C(a_d, d) + C(a_{d-1}, d-1) + ... +
C(a_delta, delta) with a_d > a_{d-1} > ... > a_delta and every a_i >= i >= 1;
the greedy construction (largest C(a, d) <= Q, recurse on the remainder one
degree down) produces it.  If an ideal's degree-d quotient has dimension Q,
the ideal's degree-(d+tau) component is at least the full component minus
the shifted expansion -- the minimal-growth bound computed here.  Everything
in this module is exact big-integer arithmetic; no floating point is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


def comb0(a: int, b: int) -> int:
    """Binomial coefficient extended by zero outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


@dataclass(frozen=True)
class MacaulayRep:
    """The unique strictly-decreasing binomial decomposition at a top degree.

    `terms` lists (a_i, i) with i running down consecutively from
    `top_degree`; the empty tuple represents Q = 0.
    """

    top_degree: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.top_degree < 1:
            raise ValueError("top degree must be >= 1")
        prev_a = None
        for pos, (a, i) in enumerate(self.terms):
            if i != self.top_degree - pos:
                raise ValueError("term degrees must descend consecutively from the top")
            if i < 1 or a < i:
                raise ValueError("each term needs a_i >= i >= 1")
            if prev_a is not None and a >= prev_a:
                raise ValueError("the a_i must strictly decrease")
            prev_a = a

    def value(self) -> int:
        """Reconstruct the represented integer."""
        return sum(math.comb(a, i) for a, i in self.terms)

    @property
    def delta(self) -> int | None:
        """Lowest degree carrying a term (None for the empty representation)."""
        return self.terms[-1][1] if self.terms else None

    def shifted_sum(self, tau: int) -> int:
        """Sum of C(a_i + tau, i + tau), the shifted quotient-size cap."""
        return sum(math.comb(a + tau, i + tau) for a, i in self.terms)


def macaulay_rep(Q: int, d: int) -> MacaulayRep:
    """Greedy (hence unique) decomposition of Q at top degree d; Q = 0 is empty."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if Q < 0:
        raise ValueError("Q must be nonnegative")
    terms: list[tuple[int, int]] = []
    i, rem = d, Q
    while rem > 0:
        if i < 1:
            raise AssertionError("greedy descent must stop by degree 1")
        a = i
        while math.comb(a + 1, i) <= rem:
            a += 1
        terms.append((a, i))
        rem -= math.comb(a, i)
        i -= 1
    return MacaulayRep(d, tuple(terms))


def macaulay_min_growth(Q: int, d: int, tau: int, N: int) -> int:
    """Lower bound on dim I_{d+tau} given dim S^d/I_d = Q in N variables.

    Q = 0 means the ideal already fills degree d, so the bound is the full
    component; Q above the full component size is not a quotient dimension
    and is rejected.
    """
    if N < 1:
        raise ValueError("ambient dimension must be >= 1")
    if tau < 0:
        raise ValueError("shift must be nonnegative")
    full = math.comb(N + d - 1, d)
    if not 0 <= Q <= full:
        raise ValueError(f"Q={Q} is not a quotient dimension at degree {d} in {N} variables")
    rep = macaulay_rep(Q, d)
    return math.comb(N + d + tau - 1, d + tau) - rep.shifted_sum(tau)


def corollary_growth(N: int, d: int, q: int, tau: int) -> int:
    """Guaranteed dim I_{d+tau} when dim I_d >= C(N+d-q-1, d-q), for q < d.

    With tau = 0 this returns the hypothesis itself; it agrees with
    macaulay_min_growth applied to the complementary quotient dimension.
    """
    if not 0 <= q < d:
        raise ValueError("need 0 <= q < d")
    if N < 1 or tau < 0:
        raise ValueError("need N >= 1 and tau >= 0")
    return math.comb(N + tau + d - q - 1, tau + d - q)


def binom_identity_check(a: int, b: int, q: int) -> bool:
    """Exact check of C(a+b, b) = sum_{j=1..q} C(a+b-j, b-j+1) + C(a+b-q, b-q)."""
    if not 0 <= q <= b:
        raise ValueError("need 0 <= q <= b")
    if a < 0:
        raise ValueError("need a >= 0")
    lhs = comb0(a + b, b)
    rhs = sum(comb0(a + b - j, b - j + 1) for j in range(1, q + 1)) + comb0(a + b - q, b - q)
    return lhs == rhs
