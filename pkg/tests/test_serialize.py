"""Text/JSON polynomial formats and table inference."""

from __future__ import annotations

import random

import pytest

from spd.poly import SparsePolynomial, VariableTable, make_determinant, make_padded_permanent
from spd.serialize import (infer_table, poly_from_json_dict, poly_from_text,
                           poly_to_json_dict, poly_to_text, substitution_to_json_dict)
from spd.degenerations import c3_two_powers

from conftest import random_homogeneous, small_table


def test_text_format_shape():
    d2 = make_determinant(2)
    assert poly_to_text(d2) == "1 * x_1_1^1 * x_2_2^1\n-1 * x_1_2^1 * x_2_1^1\n"
    zero = SparsePolynomial.zero(d2.table)
    assert poly_to_text(zero) == "0\n"


def test_text_round_trip_with_table():
    rng = random.Random(3)
    table = small_table(5)
    for _ in range(20):
        poly = random_homogeneous(table, rng.randrange(1, 4), rng.randrange(1, 6), rng)
        assert poly_from_text(poly_to_text(poly), table) == poly


def test_text_round_trip_inferred():
    pp = make_padded_permanent(2, 3)
    back = poly_from_text(poly_to_text(pp))
    # inference recovers active structure; ambient fillers are dropped
    assert back.table.names[:5] == pp.table.names[:5]
    assert {m.exps for m in back.terms} == {m.exps for m in pp.terms}


def test_text_accepts_bare_variables_and_fractions():
    table = VariableTable(("l", "l1"))
    poly = poly_from_text("3/2 * l\n-1 * l1^2\n", table)
    assert poly.degree() == 2 and len(poly) == 2


def test_infer_table_orders_kinds():
    t = infer_table({"x_2_2", "y_1_1", "l", "z_3"})
    assert t.names == ("x_1_1", "x_1_2", "x_2_1", "x_2_2", "y_1_1", "l",
                       "z_1", "z_2", "z_3")
    with pytest.raises(ValueError):
        infer_table({"bogus"})


def test_json_round_trip_preserves_ambient():
    image = c3_two_powers(3).image()
    data = poly_to_json_dict(image)
    back = poly_from_json_dict(data)
    assert back == image
    assert back.table.names == image.table.names  # fillers included
    assert data["homogeneous_degree"] == 3


def test_substitution_serialization():
    spec = c3_two_powers(2)
    data = substitution_to_json_dict(spec.substitution)
    assert data["images"]["x_1_1"] == ["1 * l1^1"]
    assert data["images"]["x_1_2"] == ["-1 * l2^1"]  # sign-corrected corner
    assert data["images"]["x_2_1"] == ["1 * l2^1"]
    assert len(data["source_variables"]) == 4
