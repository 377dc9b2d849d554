"""Closed-form quantities, exact values, and certified log intervals."""

from __future__ import annotations

import math

import pytest
from mpmath import mp, mpf

from spd.bounds import (BigQuantity, compare_quantities, det_partials_count,
                        det_shifted_lower, full_degree_component, log_estimate,
                        padded_ideal_upper, perm_partials_upper, perm_shifted_upper,
                        two_power_ideal_dim)


def test_padded_upper_values():
    assert padded_ideal_upper(3, 2, 0, 0).value == math.comb(10, 2) == 45
    assert padded_ideal_upper(4, 2, 1, 3).value == math.comb(16 + 2 + 3 - 1, 5)
    with pytest.raises(ValueError):
        padded_ideal_upper(5, 2, 3, 0)  # needs k < n - m


def test_det_partials_count_values():
    assert det_partials_count(3, 1).value == 9
    assert det_partials_count(6, 0).value == 1
    assert det_partials_count(6, 6).value == 1
    assert det_partials_count(2000, 60).value == math.comb(2000, 60) ** 2


def test_two_power_dim_values():
    assert two_power_ideal_dim(4, 1, 0).value == 2
    assert two_power_ideal_dim(3, 1, 1).value == 18
    n, k = 3, 1
    tau = n - k
    assert (two_power_ideal_dim(n, k, tau).value
            == 2 * math.comb(n * n + tau - 1, tau) - 1)
    # below the overlap degree the subtracted term vanishes
    assert two_power_ideal_dim(5, 1, 2).value == 2 * math.comb(25 + 2 - 1, 2)


def test_det_shifted_lower_values():
    assert det_shifted_lower(3, 0, 2).value == math.comb(9 + 2, 2)
    assert det_shifted_lower(3, 1, 1).value == 48
    assert det_shifted_lower(4, 2, 0).value == 15
    assert det_shifted_lower(4, 2, 0).value <= det_partials_count(4, 2).value


def test_det_shifted_lower_stays_below_partials_at_tau_zero():
    for n in range(1, 51):
        for k in range(0, n + 1):
            assert math.comb(n + k, 2 * k) <= math.comb(n, k) ** 2


def test_perm_partials_values():
    assert perm_partials_upper(2, 0).value == 1
    assert perm_partials_upper(2, 1).value == 5
    for m in (1, 2, 5, 30, 200, 1000):
        assert perm_partials_upper(m, m).value == math.comb(2 * m, m)
        assert perm_partials_upper(m, m + 7).value == math.comb(2 * m, m)


def test_perm_shifted_upper_values():
    assert perm_shifted_upper(3, 2, 1, 0).value == perm_partials_upper(2, 1).value
    assert perm_shifted_upper(3, 2, 1, 1).value == 5 * 9 == 45


def test_full_component():
    assert full_degree_component(3, 2).value == 6
    assert full_degree_component(9, 0).value == 1


def test_big_comparison_inequality_sampled():
    # C(n, 2m)^2 >= C(n^2+m-1, m) once n clears m^2, checked exactly
    for m in (10, 20, 30, 40):
        n = m * m + 1
        lhs = math.comb(n, 2 * m) ** 2
        rhs = math.comb(n * n + m - 1, m)
        assert lhs >= rhs


def test_exact_interval_agreement():
    for params in ((30, 10), (2000, 60), (123456, 17)):
        a, b = params
        exact = math.comb(a, b)
        quantity = BigQuantity("probe", value=exact)
        lo, hi = quantity.log_bounds(128)
        direct = det_partials_count(a, b, mode="interval")  # 2*ln C(a,b)
        assert lo <= mp.ln(mpf(exact)) <= hi
        assert direct.log_lo <= 2 * mp.ln(mpf(exact)) <= direct.log_hi


def test_ln_factorial_interval_contains_exact():
    for q in (1, 2, 5, 100, 9999, 10 ** 4):
        est = log_estimate("factorial", q=q)
        with mp.workprec(300):
            exact = mp.ln(mpf(math.factorial(q)))
        assert est.contains(exact)


def test_ln_factorial_interval_contains_exact_above_stirling_cutoff():
    q = 200_000
    est = log_estimate("factorial", q=q)
    with mp.workprec(1200):
        exact = mp.ln(mpf(math.factorial(q)))
    assert est.contains(exact)
    assert est.width < 1e-20


def test_central_binom_interval_contains_exact():
    for m in (2, 50, 500):
        est = log_estimate("central_binom", m=m)
        with mp.workprec(300):
            exact = mp.ln(mpf(math.comb(2 * m, m)))
        assert est.contains(exact)


def test_interval_width_shrinks_with_precision():
    coarse = log_estimate("binom", a=10 ** 8, b=10 ** 6, prec=64)
    fine = log_estimate("binom", a=10 ** 8, b=10 ** 6, prec=256)
    assert fine.width < coarse.width
    assert fine.width > 0


def test_two_power_interval_brackets_exact_value():
    exact = two_power_ideal_dim(4, 2, 5).value
    interval = two_power_ideal_dim(4, 2, 5, mode="interval")
    with mp.workprec(200):
        assert interval.log_lo <= mp.ln(mpf(exact)) <= interval.log_hi


def test_interval_mode_kicks_in_automatically_for_huge_instances():
    huge = padded_ideal_upper(2000, 30, 10, 180_000_000)
    assert not huge.is_exact
    assert huge.prec == 128


def test_compare_quantities():
    three = BigQuantity("a", value=3)
    four = BigQuantity("b", value=4)
    zero = BigQuantity("z", value=0)
    assert compare_quantities(three, four) == "<"
    assert compare_quantities(four, three) == ">"
    assert compare_quantities(three, three) == "="
    assert compare_quantities(zero, three) == "<"
    big = det_shifted_lower(2000, 14, 44_444_444, mode="interval")
    small = BigQuantity("s", value=10)
    assert compare_quantities(small, big) == "<"


def test_quantity_json_forms():
    exact = det_partials_count(3, 1)
    assert exact.to_json_dict() == {"provenance": "det-partials-count", "value": 9}
    interval = det_partials_count(3, 1, mode="interval")
    payload = interval.to_json_dict()
    assert set(payload) == {"provenance", "log_interval", "prec"}


def test_validation_errors():
    with pytest.raises(ValueError):
        det_partials_count(3, 4)
    with pytest.raises(ValueError):
        two_power_ideal_dim(3, 3, 0)
    with pytest.raises(ValueError):
        perm_partials_upper(0, 1)
    with pytest.raises(ValueError):
        log_estimate("nope", q=3)
