"""Derivative spans, shifted components, and the rank engine."""

from __future__ import annotations

import math
import random

import pytest

from spd.flatten import (BudgetExceededError, GradedComponentBasis, ShiftParams,
                         matrix_rank, partial_space, random_prime, shifted_space)
from spd.macaulay import macaulay_min_growth
from spd.poly import SparsePolynomial, make_determinant, make_padded_permanent
from spd.degenerations import c3_two_powers
from spd.bounds import two_power_ideal_dim

from conftest import random_endomorphism, random_homogeneous, small_table

M61 = (1 << 61) - 1  # fixed valid prime for deterministic prime-mode tests


def test_partial_space_rank_one_at_order_zero():
    rng = random.Random(0)
    for _ in range(10):
        table = small_table(rng.randrange(2, 5))
        poly = random_homogeneous(table, rng.randrange(1, 4), rng.randrange(1, 5), rng)
        if poly.is_zero():
            continue
        basis = partial_space(poly, 0)
        assert basis.rank == 1 and basis.degree == poly.homogeneous_degree()


def test_det3_first_order_partials():
    basis = partial_space(make_determinant(3), 1)
    assert basis.rank == 9
    assert basis.degree == 2
    assert len(basis.columns) == 18


@pytest.mark.parametrize("n", [2, 3, 4])
def test_det_partial_ranks_match_minor_counts(n):
    det = make_determinant(n)
    for k in range(n + 1):
        assert partial_space(det, k).rank == math.comb(n, k) ** 2


def test_padded_partials_rank():
    pp = make_padded_permanent(2, 3)
    basis = partial_space(pp, 1)
    assert basis.rank == 5  # = sum_{j<=1} C(2,j)^2, all five partials independent


def test_partial_space_beyond_degree_is_flagged_zero():
    det = make_determinant(2)
    basis = partial_space(det, 5)
    assert basis.rank == 0 and basis.truncated and basis.rows == ()
    zero = SparsePolynomial.zero(det.table)
    assert partial_space(zero, 0).truncated


def test_shifted_space_tau_zero_matches_partials():
    for poly in (make_determinant(3), make_padded_permanent(2, 4)):
        for k in (0, 1, 2):
            assert shifted_space(poly, k, 0).rank == partial_space(poly, k).rank


def test_two_power_shift_example():
    image = c3_two_powers(3).image()  # two cubes in a 9-dim ambient space
    basis = shifted_space(image, 1, 1)
    assert basis.rank == 18 == 2 * math.comb(9, 1)
    assert basis.shift_indices == tuple(range(9))


def test_det3_shifted_dimension_frozen():
    basis = shifted_space(make_determinant(3), 1, 1)
    assert basis.rank == 65  # frozen from the dense elimination oracle
    assert basis.rank >= math.comb(4, 2) * math.comb(8, 1) == 48


def test_shifted_space_active_mode_counts_fewer_columns():
    image = c3_two_powers(3).image()
    active = shifted_space(image, 1, 1, shift_vars="active")
    assert active.rank == 4  # l1^2, l2^2 shifted by l1 and l2 only
    assert active.shift_indices == (0, 1)


def test_budget_guardrail():
    det = make_determinant(4)
    with pytest.raises(BudgetExceededError):
        partial_space(det, 2, max_entries=10)
    with pytest.raises(BudgetExceededError):
        shifted_space(det, 1, 2, max_entries=100)


def test_rank_edge_cases():
    table = small_table(3)
    assert matrix_rank([]) == 0
    row = random_homogeneous(table, 2, 3, random.Random(1))
    assert matrix_rank([row, row, row]) == (0 if row.is_zero() else 1)
    assert matrix_rank([row.scale(5), row.scale(-2)]) == 1


def test_prime_mode_matches_exact():
    rng = random.Random(21)
    for _ in range(25):
        table = small_table(rng.randrange(2, 6))
        rows = [random_homogeneous(table, rng.randrange(1, 4), rng.randrange(1, 5), rng)
                for _ in range(rng.randrange(1, 8))]
        assert matrix_rank(rows, mode="prime", prime=M61) == matrix_rank(rows)


def test_prime_mode_with_random_prime():
    rng = random.Random(2024)
    p = random_prime(rng)
    assert p > 1 << 60
    det = make_determinant(3)
    basis = partial_space(det, 1, mode="prime", prime=p)
    assert basis.rank == 9 and basis.prime == p and basis.mode == "prime"


def test_small_or_composite_primes_refused():
    det = make_determinant(2)
    with pytest.raises(ValueError):
        partial_space(det, 1, mode="prime", prime=10 ** 6 + 3)
    with pytest.raises(ValueError):
        partial_space(det, 1, mode="prime", prime=(1 << 61) + 1)  # composite


def test_prime_and_exact_agree_on_det4():
    det = make_determinant(4)
    exact = partial_space(det, 2)
    modular = partial_space(det, 2, mode="prime", prime=M61)
    assert exact.rank == modular.rank == 36


def test_rank_is_order_independent():
    rng = random.Random(33)
    table = small_table(4)
    rows = [random_homogeneous(table, 3, 4, rng) for _ in range(12)]
    rows = [r for r in rows if not r.is_zero()]
    baseline = matrix_rank(rows)
    for _ in range(5):
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert matrix_rank(shuffled) == baseline


def test_pivot_rows_span_the_space():
    det = make_determinant(3)
    basis = shifted_space(det, 1, 1)
    kept = basis.basis_rows()
    assert len(kept) == basis.rank
    assert matrix_rank(list(kept)) == basis.rank


def test_substitution_monotonicity_sampled():
    rng = random.Random(77)
    for _ in range(40):
        table = small_table(rng.randrange(3, 6))
        poly = random_homogeneous(table, rng.randrange(2, 5), rng.randrange(2, 6), rng)
        sub = random_endomorphism(table, rng)
        image = poly.substitute(sub)
        k = rng.randrange(0, 3)
        assert partial_space(image, k).rank <= partial_space(poly, k).rank
        tau = rng.randrange(0, 3)
        assert shifted_space(image, k, tau).rank <= shifted_space(poly, k, tau).rank


def test_growth_respects_macaulay_floor():
    for poly, k in ((make_determinant(3), 1), (make_padded_permanent(2, 4), 1),
                    (c3_two_powers(3).image(), 2)):
        nvars = len(poly.table)
        previous = None
        for tau in range(3):
            basis = shifted_space(poly, k, tau)
            if previous is not None:
                degree = basis.degree - 1
                quotient = math.comb(nvars + degree - 1, degree) - previous
                assert basis.rank >= macaulay_min_growth(quotient, degree, 1, nvars)
            previous = basis.rank


def test_shift_params():
    sp = ShiftParams(k=2, tau=3)
    assert sp.t(5) == 6
    with pytest.raises(ValueError):
        ShiftParams(k=-1, tau=0)


def test_basis_validates_homogeneity():
    det = make_determinant(2)
    with pytest.raises(ValueError):
        GradedComponentBasis(degree=5, table=det.table, rows=(det,), columns=(),
                             rank=0, mode="exact", prime=None, pivot_rows=())
