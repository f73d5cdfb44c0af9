import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ratsign.algebra import GElement
from ratsign.alternations import U, V, count_recursive
from ratsign.profiles import EVEN, ODD
from ratsign.snumbers import (
    BaseDescriptor, InsufficientDataError, InvalidDescriptorError, NonIntegralCoefficientError,
    SNumberReport, asymptotic_report, assemble_FB, broken_alternation_sign, complex_reference,
    epsilon_base, extract_s_numbers, observed_leading_terms, random_descriptor,
    ratio_diagnostics, s_numbers_empty, stated_leading_terms,
)

seeds = st.integers(0, 2 ** 32 - 1)


def test_empty_descriptor_gives_u_and_v():
    assert assemble_FB(BaseDescriptor("C", ODD, 1, (0,))) == U
    assert assemble_FB(BaseDescriptor("C", EVEN, 1, (0,))) == V


@pytest.mark.parametrize("desc, message", [
    (BaseDescriptor("D", ODD, 1, (0,)), "type"),
    (BaseDescriptor("C", ODD, 2, (0,)), "special"),
    (BaseDescriptor("A", ODD, 1, (1,)), "type A"),
    (BaseDescriptor("A", EVEN, 1, (0, 0)), "sp = 1"),
    (BaseDescriptor("C", EVEN, 1, (0,), (((1,), ()),)), "left end"),
    (BaseDescriptor("C", ODD, 1, (0,), (((1,),),)), "groups of real"),
    (BaseDescriptor("C", ODD, 1, (-1,)), "non-negative"),
])
def test_invalid_descriptors(desc, message):
    with pytest.raises(InvalidDescriptorError, match=message):
        assemble_FB(desc)


def test_descriptor_sign_counts_pole_as_one():
    # sequence 2 | 1 | 3 has one disorder
    desc = BaseDescriptor("B", ODD, 1, (0,), (((2,), (3,)),))
    assert epsilon_base(desc) == -1
    assert epsilon_base(BaseDescriptor("C", ODD, 1, (0,), (((2,), (3,)),))) == 1


def test_descriptor_json_roundtrip():
    desc = random_descriptor(random.Random(3))
    assert BaseDescriptor.from_json(desc.to_json()) == desc
    with pytest.raises(InvalidDescriptorError):
        BaseDescriptor.from_json({"base_type": "C"})


@given(seeds)
def test_random_descriptors_are_valid(seed):
    random_descriptor(random.Random(seed)).validate()


@given(seeds)
def test_extracted_numbers_are_integers(seed):
    F = assemble_FB(random_descriptor(random.Random(seed), max_chains=3, max_c=2))
    assert all(isinstance(x, int) for x in extract_s_numbers(F, 15))


@given(seeds)
def test_degrees_always_match_the_table(seed):
    B = random_descriptor(random.Random(seed))
    stated = stated_leading_terms(B)
    got = observed_leading_terms(assemble_FB(B))
    assert got[:2] == stated[:2]


@given(seeds)
def test_coefficients_match_when_the_special_chain_is_bare(seed):
    B = random_descriptor(random.Random(seed))
    if B.base_type == "C" and B.c[B.sp - 1] > 0:
        return
    assert observed_leading_terms(assemble_FB(B)) == stated_leading_terms(B)


@pytest.mark.xfail(strict=True, reason="u_c and v_c carry an extra factor c+1")
@pytest.mark.parametrize("parity, sp, c", [(ODD, 1, (1,)), (EVEN, 1, (2, 0)), (EVEN, 2, (0, 1))])
def test_stated_coefficients_with_loaded_special_chain(parity, sp, c):
    B = BaseDescriptor("C", parity, sp, c)
    assert observed_leading_terms(assemble_FB(B)) == stated_leading_terms(B)


def test_extract_rejects_fractions():
    with pytest.raises(NonIntegralCoefficientError):
        extract_s_numbers(GElement.const(Fraction(1, 2)), 3)


def test_empty_profile_numbers():
    assert s_numbers_empty(5, ODD).values == [(1, 0), (3, -2), (5, 26)]
    assert s_numbers_empty(6, EVEN).values == [(0, 0), (2, -1), (4, 7), (6, -117)]


@pytest.mark.parametrize("parity", [ODD, EVEN])
def test_empty_profile_sign_rule_to_61(parity):
    rep = s_numbers_empty(61, parity)
    B = count_recursive(61).B
    assert rep.diagnostics["recursion_mismatches"] == []
    for m, s in rep.values:
        if m:
            assert s == broken_alternation_sign(m) * B[m]


def test_report_json_keys():
    data = s_numbers_empty(7).to_json()
    assert {"lambda", "parity", "values", "diagnostics"} <= set(data)
    assert data["values"][1] == [3, "-2"]


def test_asymptotics_need_enough_values():
    with pytest.raises(InsufficientDataError):
        asymptotic_report(s_numbers_empty(15))


def test_corrected_ratio_approaches_the_pole():
    diag = asymptotic_report(s_numbers_empty(63))
    rho = dict(diag.corrected_ratios)
    assert abs(rho[30] * math.pi ** 2 / 4 - 1) < 0.01
    assert abs(diag.radius_corrected - math.pi ** 2 / 4) < 0.01


def test_log_growth_is_still_far_from_one_at_61():
    r = dict(asymptotic_report(s_numbers_empty(61)).log_ratios)[61]
    assert 0.6 < r < 0.7


def test_geometric_control():
    b = {k: Fraction(1, 2 ** k) for k in range(1, 30)}
    naive, corrected = ratio_diagnostics(b)
    assert all(r == 0.5 for _, r in naive)
    assert all(r == pytest.approx(0.5 * k / (k + 1)) for k, r in corrected)
    # the same control through the report path: S(2k) = (2k)! / 2^k
    values = [(2 * k, Fraction(math.factorial(2 * k), 2 ** k)) for k in range(1, 20)]
    diag = asymptotic_report(SNumberReport(None, values, GElement()))
    assert diag.radius_naive == pytest.approx(2)


def test_complex_reference():
    assert complex_reference(2) == 1
    assert complex_reference(5) == 256
    with pytest.raises(ValueError):
        complex_reference(1)
    values = dict(s_numbers_empty(12, ODD).values) | dict(s_numbers_empty(12, EVEN).values)
    for m in range(2, 13):
        assert abs(values[m]) <= 2 * complex_reference(m)
