from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ratsign.algebra import (
    F, G, ONE, Q, GElement, InsufficientOrderError, TruncatedSeries, ZeroPartError,
    apply_D, degrees, expand, expansion_matrix, format_gelement, gelement_from_json,
    gelement_to_json, independence_rank, leading_coefficient, matrix_rank, minimal_order,
    tanh_sech,
)

from strategies import gelements

ORDER = 12


def test_g_squared_reduces():
    assert G * G == ONE - F * F
    assert (G * G).g_part == {}


def test_derivations_of_generators():
    assert apply_D(Q) == Q
    assert apply_D(F) == Q * (1 - F * F)
    assert apply_D(G) == -(Q * F * G)


def test_degrees_of_zero_and_generators():
    assert degrees(GElement()) == (None, None)
    assert degrees(Q * F + 3) == ((1, 1), None)
    assert degrees(F * G) == (None, (0, 2))
    with pytest.raises(ZeroPartError):
        leading_coefficient(F, "g")


def test_expansion_of_tanh_and_sech():
    f, g = tanh_sech(7)
    assert f.coeffs[:6] == [0, 1, 0, Fraction(-1, 3), 0, Fraction(2, 15)]
    assert g.coeffs[:5] == [1, 0, Fraction(-1, 2), 0, Fraction(5, 24)]
    assert f * f + g * g == TruncatedSeries.one(7)


def test_series_derivative_drops_top_order():
    s = TruncatedSeries([1, 2, 3], 2)
    assert s.derivative() == TruncatedSeries([2, 6], 1)


def test_json_roundtrip_and_text():
    a = Fraction(1, 2) * Q * F * F - 3 * G + 1
    assert gelement_from_json(gelement_to_json(a)) == a
    assert format_gelement(a) == "1 + 1/2*q*f^2 - 3*g"


@given(gelements(), gelements(), gelements())
def test_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == GElement()


@given(gelements(), gelements())
def test_leibniz_rule(a, b):
    assert apply_D(a * b) == apply_D(a) * b + a * apply_D(b)


@given(gelements(), gelements())
def test_expansion_is_a_ring_homomorphism(a, b):
    assert expand(a * b, ORDER) == expand(a, ORDER) * expand(b, ORDER)
    assert expand(a + b, ORDER) == expand(a, ORDER) + expand(b, ORDER)


@given(gelements())
def test_expansion_commutes_with_D(a):
    lhs = expand(apply_D(a), ORDER)
    d = expand(a, ORDER + 1).derivative().shift(1).truncate(ORDER)
    assert lhs == d


@given(gelements(), st.sampled_from(["f", "g"]))
def test_D_raises_degree_and_scales_leading_coefficient(a, side):
    deg = degrees(a)[0 if side == "f" else 1]
    if deg is None or deg[1] == 0:
        return
    Da = apply_D(a)
    assert degrees(Da)[0 if side == "f" else 1] == (deg[0] + 1, deg[1] + 1)
    assert leading_coefficient(Da, side) == -deg[1] * leading_coefficient(a, side)


def test_minimal_order_counts_rows_by_parity():
    assert minimal_order((8, 8)) == 162
    assert minimal_order((0, 0)) == 2


def test_independence_needs_enough_rows():
    with pytest.raises(InsufficientOrderError):
        independence_rank((8, 8), 40)


def test_rank_is_row_limited_at_order_40():
    rows = expansion_matrix((8, 8), 40)
    assert matrix_rank(rows) == 41 < len(rows[0]) == 162


@pytest.mark.parametrize("bideg", [(1, 1), (2, 3), (3, 3)])
def test_independence_at_minimal_order(bideg):
    assert independence_rank(bideg, minimal_order(bideg))


def test_independence_for_the_full_family():
    # the (8, 8) family is independent once enough rows are available
    assert independence_rank((8, 8), minimal_order((8, 8)))
