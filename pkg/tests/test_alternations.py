from fractions import Fraction

import pytest

from ratsign.algebra import F, G, GElement, expand, leading_coefficient
from ratsign.alternations import (
    BRUTEFORCE_LIMIT, U, V, SizeLimitError, broken_series, classify, count_bruteforce,
    count_recursive, disorders, family, verify_odes, zigzag_numbers,
)

B_1_12 = [0, 1, 2, 7, 26, 117, 594, 3407, 21682, 151853, 1160026, 9600567]


def test_zigzag_numbers():
    assert zigzag_numbers(10) == [1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521]


def test_broken_table():
    assert count_recursive(12).B[1:] == B_1_12


def test_positions_sum_to_totals():
    t = count_recursive(12)
    for n in range(1, 13):
        assert sum(t.B_by_pos[n]) == t.B[n]


@pytest.mark.parametrize("n", range(0, 8))
def test_bruteforce_agrees(n):
    t = count_recursive(n)
    a, b, pos = count_bruteforce(n)
    assert (a, b) == (t.A[n], t.B[n])
    if n:
        assert pos == t.B_by_pos[n]


def test_bruteforce_size_limit():
    with pytest.raises(SizeLimitError):
        count_bruteforce(BRUTEFORCE_LIMIT + 1)


@pytest.mark.parametrize("perm, expected", [
    ((1,), "ordinary"),
    ((2, 1), "ordinary"),
    ((1, 2), "broken(1)"),
    ((3, 2, 4, 1), "ordinary"),
    ((2, 5, 4, 3, 1), "broken(3)"),
    ((3, 2, 1), "broken(1)"),
    ((3, 1, 2), "neither"),
])
def test_classify(perm, expected):
    assert str(classify(perm)) == expected


def test_classify_rejects_non_permutations():
    with pytest.raises(ValueError):
        classify((1, 1, 2))


def test_disorders():
    assert disorders((1, 3, 2, 2, 2, 1)) == 7
    assert disorders((4, 3, 2, 2, 6)) == 5
    assert disorders(()) == 0


def test_closed_forms_match_recursion():
    assert broken_series("u", 30) == expand(U, 30)
    assert broken_series("v", 30) == expand(V, 30)
    assert expand(U, 5).coeffs[5] == Fraction(13, 60)


def test_odes():
    assert verify_odes(40)
    assert not verify_odes(5, u=F)
    assert not verify_odes(5, v=G)


def test_family_first_step():
    assert family("f_c", 1) == GElement({(0, 1): Fraction(-1, 2), (1, 0): Fraction(1, 2),
                                         (1, 2): Fraction(-1, 2)})
    assert family("g~_c", 2) == family("gt_c", 2)
    with pytest.raises(ValueError):
        family("w_c", 1)


@pytest.mark.parametrize("n", range(0, 6))
@pytest.mark.parametrize("kind, side", [("f_c", "f"), ("g_c", "g"), ("gt_c", "g")])
def test_family_leading_coefficients(kind, side, n):
    assert leading_coefficient(family(kind, n), side) == Fraction((-1) ** n, 2 ** n)


@pytest.mark.parametrize("n", range(0, 6))
def test_u_and_v_families_grow_by_n_plus_one(n):
    base = Fraction((-1) ** n * (n + 1), 2 ** n)
    assert leading_coefficient(family("u_c", n), "f") == base
    assert leading_coefficient(family("u_c", n), "g") == 2 * base
    assert leading_coefficient(family("v_c", n), "f") == -2 * base
    assert leading_coefficient(family("v_c", n), "g") == base


@pytest.mark.xfail(strict=True, reason="(-1)^n/2^n alone misses the factor n+1 of u_n and v_n")
@pytest.mark.parametrize("n", range(1, 4))
def test_u_family_without_growth_factor(n):
    assert leading_coefficient(family("u_c", n), "f") == Fraction((-1) ** n, 2 ** n)
