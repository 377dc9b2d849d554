"""Binomial decompositions, growth bounds, and the binomial identity."""

from __future__ import annotations

import itertools
import math
import random
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spd.macaulay import (MacaulayRep, binom_identity_check, comb0,
                          corollary_growth, macaulay_min_growth, macaulay_rep)


def test_comb0_extends_by_zero():
    assert comb0(5, 2) == 10
    assert comb0(5, -1) == 0 and comb0(3, 7) == 0 and comb0(-2, 0) == 0


def test_rep_examples():
    assert macaulay_rep(10, 3).terms == ((5, 3),)
    assert macaulay_rep(1, 4).terms == ((4, 4),)
    assert macaulay_rep(9, 3).terms == ((4, 3), (3, 2), (2, 1))
    assert macaulay_rep(3, 2).terms == ((3, 2),)
    assert macaulay_rep(0, 3).terms == ()


@given(st.integers(1, 10 ** 6), st.integers(1, 8))
@settings(max_examples=200)
def test_rep_reconstructs_its_input(Q, d):
    rep = macaulay_rep(Q, d)
    assert rep.value() == Q
    degrees = [i for _, i in rep.terms]
    assert degrees == list(range(d, d - len(degrees), -1))


@lru_cache(maxsize=None)
def _count_decompositions(rem: int, i: int, a_cap: int) -> int:
    """Number of strictly-decreasing consecutive-degree decompositions."""
    if rem == 0:
        return 1
    if i == 0:
        return 0
    total = 0
    a = i
    while a < a_cap and math.comb(a, i) <= rem:
        total += _count_decompositions(rem - math.comb(a, i), i - 1, a)
        a += 1
    return total


def test_rep_unique_exhaustively_small():
    for d in range(1, 5):
        for Q in range(1, 301):
            assert _count_decompositions(Q, d, 10 ** 9) == 1
            assert macaulay_rep(Q, d).value() == Q


def test_rep_validation():
    with pytest.raises(ValueError):
        macaulay_rep(-1, 3)
    with pytest.raises(ValueError):
        macaulay_rep(5, 0)
    with pytest.raises(ValueError):
        MacaulayRep(2, ((2, 2), (2, 1)))  # a_i not strictly decreasing
    with pytest.raises(ValueError):
        MacaulayRep(2, ((3, 1),))  # degree gap below the top


def test_min_growth_edges():
    # tau = 0 reproduces the complement of Q
    assert macaulay_min_growth(3, 2, 0, 3) == math.comb(4, 2) - 3
    # Q = 0: the ideal already fills the degree, growth is the full component
    assert macaulay_min_growth(0, 2, 3, 4) == math.comb(4 + 5 - 1, 5)
    with pytest.raises(ValueError):
        macaulay_min_growth(math.comb(6, 2) + 1, 2, 1, 5)
    with pytest.raises(ValueError):
        macaulay_min_growth(-1, 2, 1, 5)


def test_min_growth_matches_lex_segment_enumeration():
    # Quotient of size 3 at degree 2 in 3 variables: the extremal ideal is
    # spanned by the three lex-largest quadrics; count its cubic multiples.
    nvars, d, size, tau = 3, 2, 3, 1

    def exps(combo):
        out = [0] * nvars
        for i in combo:
            out[i] += 1
        return tuple(out)

    quadrics = sorted(itertools.combinations_with_replacement(range(nvars), d))[:size]
    segment = [exps(c) for c in quadrics]
    count = 0
    for combo in itertools.combinations_with_replacement(range(nvars), d + tau):
        e = exps(combo)
        if any(all(x >= y for x, y in zip(e, s)) for s in segment):
            count += 1
    assert count == 6
    assert macaulay_min_growth(3, 2, 1, 3) == 6  # the bound is attained here


def test_min_growth_monotonicity():
    rng = random.Random(4)
    for _ in range(150):
        N = rng.randrange(2, 8)
        d = rng.randrange(1, 6)
        full = math.comb(N + d - 1, d)
        Q = rng.randrange(0, full)
        tau = rng.randrange(0, 6)
        base = macaulay_min_growth(Q, d, tau, N)
        assert macaulay_min_growth(Q, d, tau + 1, N) >= base
        if Q + 1 <= full:
            assert macaulay_min_growth(Q + 1, d, tau, N) <= base


def test_corollary_examples():
    assert corollary_growth(2, 3, 1, 2) == math.comb(5, 4) == 5
    assert corollary_growth(7, 4, 2, 0) == math.comb(7 + 4 - 2 - 1, 2)  # the hypothesis
    with pytest.raises(ValueError):
        corollary_growth(3, 2, 2, 1)
    with pytest.raises(ValueError):
        corollary_growth(3, 2, -1, 1)


def test_corollary_agrees_with_min_growth():
    for N in range(1, 13):
        for d in range(1, 13):
            for q in range(0, d):
                for tau in range(0, 13):
                    full = math.comb(N + d - 1, d)
                    hypothesis_dim = math.comb(N + d - q - 1, d - q)
                    assert (macaulay_min_growth(full - hypothesis_dim, d, tau, N)
                            == corollary_growth(N, d, q, tau))


def test_binom_identity_examples():
    assert binom_identity_check(5, 4, 0)
    assert binom_identity_check(1, 2, 1)  # C(3,2) = C(2,2) + C(2,1)
    with pytest.raises(ValueError):
        binom_identity_check(2, 3, 4)


@given(st.integers(0, 200), st.integers(0, 200), st.data())
@settings(max_examples=150)
def test_binom_identity_random(a, b, data):
    q = data.draw(st.integers(0, b))
    assert binom_identity_check(a, b, q)
