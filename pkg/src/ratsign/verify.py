"""The acceptance checks, shared by the test suite and ``ratsign verify-all``."""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Tuple

from ratsign import algebra, alternations, bwgraphs, profiles, snumbers

B_TABLE = [0, 1, 2, 7, 26, 117, 594, 3407, 21682, 151853, 1160026, 9600567]


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail} ({self.seconds:.1f}s)"


def check_broken_table() -> Tuple[bool, str]:
    t0 = time.perf_counter()
    B = alternations.count_recursive(12).B[1:]
    dt = time.perf_counter() - t0
    return B == B_TABLE and dt < 1.0, f"B_1..B_12 = {B}, {dt * 1000:.1f} ms"


def check_bruteforce(n_max: int = 9) -> Tuple[bool, str]:
    t0 = time.perf_counter()
    rec = alternations.count_recursive(n_max)
    bad = []
    for n in range(n_max + 1):
        a, b, pos = alternations.count_bruteforce(n)
        if (a, b) != (rec.A[n], rec.B[n]) or (n and pos != rec.B_by_pos[n]):
            bad.append(n)
    dt = time.perf_counter() - t0
    return not bad and dt < 30.0, f"mismatches at n = {bad}, {dt:.1f} s" if bad else f"n <= {n_max} agree, {dt:.1f} s"


def check_odes(order: int = 40) -> Tuple[bool, str]:
    ok_ode = alternations.verify_odes(order)
    f, g = algebra.tanh_sech(order)
    ok_pyth = (f * f + g * g) == algebra.TruncatedSeries.one(order)
    return ok_ode and ok_pyth, f"ODEs and closed forms {ok_ode}, f^2 + g^2 = 1 {ok_pyth} (order {order})"


def check_invariance(d_max: int = 7) -> Tuple[bool, str]:
    bad = []
    for d in range(2, d_max + 1):
        bad.extend(bwgraphs.verify_invariance(d))
    example = bwgraphs.signed_sums((3, 2, 1, 1), (3, 2, 2))
    ok = not bad and example == (2, 2)
    return ok, f"{len(bad)} mismatches for d <= {d_max}; example sums {example}"


def fixture_graphs() -> Tuple[bwgraphs.RealBwGraph, bwgraphs.RealBwGraph]:
    """The two hand-drawn example graphs, rebuilt from their real degree sequences."""
    W, B = bwgraphs.WHITE, bwgraphs.BLACK
    leaf_w, leaf_b = bwgraphs.PlaneTree(W), bwgraphs.PlaneTree(B)
    # W1 B4 W3 B3 W2 B2 W2 B2 W2 B6 W1, cycle between v_3 and v_4
    top = bwgraphs.RealBwGraph(W, ((), (leaf_w,), (), (), (), (), (), (), (), (leaf_w, leaf_w), ()), 3)
    # B2 W3 B2 W4 B3, cycle between v_1 and v_2
    bottom = bwgraphs.RealBwGraph(B, ((), (), (), (leaf_b,), (leaf_w,)), 1)
    return top, bottom


def check_sign_fixtures() -> Tuple[bool, str]:
    top, bottom = fixture_graphs()
    got = [(s.lev, s.pol, s.sign) for s in map(bwgraphs.sign, (top, bottom))]
    seqs = [bwgraphs.real_sequences(G) for G in (top, bottom)]
    ok = got == [(12, 2, 1), (0, 1, -1)] and seqs == [((1, 3, 2, 2, 2, 1), (4, 3, 2, 2, 6)),
                                                      ((3, 4), (2, 2, 3))]
    return ok, f"(lev, pol, sign) = {got}"


def check_flip_rotation(d_max: int = 6) -> Tuple[bool, str]:
    bad = []
    for d in range(2, d_max + 1):
        bad.extend(bwgraphs.flip_rotation_violations(d))
    return not bad, f"{len(bad)} violations for d <= {d_max}" + (f"; first: {bad[0]}" if bad else "")


def check_empty_pipeline(max_m: int = 61) -> Tuple[bool, str]:
    problems = []
    for parity in (profiles.ODD, profiles.EVEN):
        rep = snumbers.s_numbers_empty(max_m, parity)
        if rep.diagnostics["recursion_mismatches"]:
            problems.append(f"{parity}: S mismatches at {rep.diagnostics['recursion_mismatches']}")
        lam = profiles.ReducedProfiles((), parity)
        stated = profiles.leading_coefficients(lam)
        got = snumbers.observed_leading_terms(rep.series_used)
        want = (stated[0].degree, stated[1].degree, stated[0].coefficient, stated[1].coefficient)
        if got != want:
            problems.append(f"{parity}: leading terms {got} != {want}")
    u = snumbers.observed_leading_terms(alternations.U)
    v = snumbers.observed_leading_terms(alternations.V)
    if u != ((1, 2), (0, 2), 1, 2) or v != ((0, 2), (1, 2), -2, 1):
        problems.append(f"u {u}, v {v}")
    return not problems, "; ".join(problems) or f"exact to m = {max_m}, leading terms of u and v agree"


def _parts_of_length(k: int, max_entry: int) -> List[Tuple[int, ...]]:
    return list(itertools.combinations_with_replacement(range(max_entry, 0, -1), k))


def _compositions(n: int) -> Iterator[Tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def small_profiles(max_parts: int = 5, max_entry: int = 4) -> Iterator[profiles.ReducedProfiles]:
    """Every ordered profile with at most ``max_parts`` entries in total, both parities."""
    for total in range(max_parts + 1):
        for comp in _compositions(total):
            for parts in itertools.product(*[_parts_of_length(k, max_entry) for k in comp]):
                for parity in (profiles.ODD, profiles.EVEN):
                    yield profiles.ReducedProfiles(parts, parity)


def simple_base_deviations(lam: profiles.ReducedProfiles) -> List[str]:
    if not profiles.nonvanishing(lam):
        return []
    s = profiles.stats(lam)
    sgn = profiles.expected_class_sign(lam)
    count_c, count_b = profiles.simple_base_counts_closed(lam)
    out = []
    S_C = profiles.signed_sum(profiles.enumerate_simple_bases(lam, "C"))
    want_c = 0 if (lam.parity == profiles.ODD and s.e_frak > 0) else count_c
    if S_C * sgn != want_c:
        out.append(f"{lam.to_text()} {lam.parity} type C: {S_C * sgn} != {want_c}")
    if count_b is not None:
        S_B = profiles.signed_sum(profiles.enumerate_simple_bases(lam, "B"))
        if S_B * sgn != count_b:
            out.append(f"{lam.to_text()} {lam.parity} type B: {S_B * sgn} != {count_b}")
    return out


def check_simple_bases(max_parts: int = 5) -> Tuple[bool, str]:
    bad: List[str] = []
    n = 0
    for lam in small_profiles(max_parts):
        n += 1
        bad.extend(simple_base_deviations(lam))
    return not bad, f"{len(bad)} deviations over {n} profiles" + (f"; first: {bad[0]}" if bad else "")


def check_independence(max_bidegree=(8, 8), order: int = 40) -> Tuple[bool, str]:
    rows = algebra.expansion_matrix(max_bidegree, order)
    rank = algebra.matrix_rank(rows)
    cols = len(rows[0])
    return rank == cols, f"rank {rank} of {cols} columns at order {order} (full rank needs order >= {algebra.minimal_order(max_bidegree)})"


def descriptor_violations(n: int = 1000, seed: int = 0) -> List[str]:
    rng = random.Random(seed)
    bad = []
    for _ in range(n):
        B = snumbers.random_descriptor(rng)
        stated = snumbers.stated_leading_terms(B)
        got = snumbers.observed_leading_terms(snumbers.assemble_FB(B))
        if stated != got:
            bad.append(f"{B.to_json()}: stated {stated}, got {got}")
    return bad


def check_descriptors(n: int = 1000, seed: int = 0) -> Tuple[bool, str]:
    bad = descriptor_violations(n, seed)
    return not bad, f"{len(bad)} violations in {n} descriptors" + (f"; first: {bad[0]}" if bad else "")


def check_asymptotics() -> Tuple[bool, str]:
    rep = snumbers.s_numbers_empty(63, profiles.ODD)
    diag = snumbers.asymptotic_report(rep)
    r61 = dict(diag.log_ratios)[61]
    rho30 = dict(diag.corrected_ratios)[30]
    target = 4 / math.pi ** 2
    ok_r = 0.9 <= r61 <= 1.1
    ok_rho = abs(rho30 / target - 1) <= 0.01
    values = dict(snumbers.s_numbers_empty(12, profiles.ODD).values)
    values.update(snumbers.s_numbers_empty(12, profiles.EVEN).values)
    ok_c = all(abs(values[m]) <= 2 * snumbers.complex_reference(m) for m in range(2, 13))
    return ok_r and ok_rho and ok_c, (f"r_61 = {r61:.4f} (want [0.9, 1.1]), rho_30 = {rho30:.5f} "
                                      f"vs 4/pi^2 = {target:.5f}, complex bound {ok_c}")


VANISHING_TABLE = [
    ("3,1", profiles.ODD, False), ("3,1", profiles.EVEN, False),
    ("2,1", profiles.ODD, False), ("2,1", profiles.EVEN, True),
    ("2,2", profiles.ODD, True), ("2,2", profiles.EVEN, True),
    ("", profiles.ODD, True), ("", profiles.EVEN, True),
]


def check_vanishing(n: int = 10_000, seed: int = 0) -> Tuple[bool, str]:
    table_bad = [(t, p) for t, p, want in VANISHING_TABLE
                 if profiles.nonvanishing(profiles.ReducedProfiles.parse(t, p)) != want]
    rng = random.Random(seed)
    random_bad = 0
    for _ in range(n):
        lam = profiles.random_profile(rng)
        if profiles.nonvanishing(lam) != (profiles.trivially_vanishes(lam) is None):
            random_bad += 1
    return not table_bad and not random_bad, f"table mismatches {table_bad}, random mismatches {random_bad}/{n}"


CHECKS: List[Tuple[str, Callable[[], Tuple[bool, str]]]] = [
    ("01 broken-alternation table", check_broken_table),
    ("02 brute force vs recursion", check_bruteforce),
    ("03 ODE and closed forms", check_odes),
    ("04 invariance by exhaustion", check_invariance),
    ("05 sign fixtures", check_sign_fixtures),
    ("06 flip and rotation", check_flip_rotation),
    ("07 empty-profile pipeline", check_empty_pipeline),
    ("08 simple-base two routes", check_simple_bases),
    ("09 linear independence", check_independence),
    ("10 F_B degrees and coefficients", check_descriptors),
    ("11 asymptotics", check_asymptotics),
    ("12 vanishing truth table", check_vanishing),
]


def run_check(name: str, fn: Callable[[], Tuple[bool, str]]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure, reported with its message
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, bool(ok), detail, time.perf_counter() - t0)


def run_all(names=None) -> List[CheckResult]:
    selected = [(n, f) for n, f in CHECKS if names is None or n in names]
    return sorted((run_check(n, f) for n, f in selected), key=lambda r: r.name)
