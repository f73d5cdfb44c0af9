"""Ordinary and broken alternations, and the series f, g, u, v built from them."""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from ratsign.algebra import F, G, ONE, Q, GElement, apply_D, expand

BRUTEFORCE_LIMIT = 10


class SizeLimitError(ValueError):
    pass


def zigzag_numbers(n_max: int) -> List[int]:
    """A_0..A_{n_max} via the boustrophedon triangle."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    out = [1]
    row = [1]
    for n in range(1, n_max + 1):
        new = [0]
        for k in range(n):
            new.append(new[-1] + row[n - 1 - k])
        row = new
        out.append(row[-1])
    return out


def disorders(seq: Sequence[int]) -> int:
    """Number of pairs i < j with seq[i] > seq[j]."""
    s = list(seq)
    return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])


@dataclass(frozen=True)
class Classification:
    kind: str  # "ordinary", "broken" or "neither"
    break_index: Optional[int] = None

    def __str__(self):
        return f"broken({self.break_index})" if self.kind == "broken" else self.kind


def _violations(values: Sequence[int]) -> List[int]:
    n = len(values)
    bad = []
    for i in range(1, n):
        a, b = values[i - 1], values[i]
        # reading from the right: a_n < a_{n-1} > a_{n-2} < ...
        want_desc = (n - i) % 2 == 1
        if (a > b) != want_desc:
            bad.append(i)
    return bad


def classify(perm: Sequence[int]) -> Classification:
    """Classify a permutation of 1..n (1-based positions in the break index)."""
    values = list(perm)
    n = len(values)
    if n < 1 or sorted(values) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {values}")
    bad = _violations(values)
    if not bad:
        return Classification("ordinary")
    if len(bad) == 1:
        return Classification("broken", bad[0])
    return Classification("neither")


@dataclass
class AlternationTables:
    n_max: int
    A: List[int]
    B: List[int]
    B_by_pos: Dict[int, List[int]] = field(default_factory=dict)  # n -> [B_n^1 .. B_n^n]


def count_recursive(n_max: int) -> AlternationTables:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    A = zigzag_numbers(n_max)
    B = [0] * (n_max + 1)
    by_pos: Dict[int, List[int]] = {}
    if n_max >= 1:
        by_pos[1] = [0]
    for n in range(2, n_max + 1):
        row = []
        for j in range(1, n + 1):
            if (n + j) % 2 == 1:
                row.append(comb(n - 1, j - 1) * (B[j - 1] * A[n - j] + A[j - 1] * B[n - j]))
            elif j == n or (n % 2 == 1 and j == 1):
                row.append(A[n - 1])
            else:
                row.append(0)
        by_pos[n] = row
        B[n] = sum(row)
    return AlternationTables(n_max, A, B, by_pos)


def _tally_chunk(n: int, first: int) -> Tuple[int, int, List[int]]:
    a = b = 0
    pos = [0] * n
    rest = [x for x in range(1, n + 1) if x != first]
    for tail in itertools.permutations(rest):
        perm = (first,) + tail
        bad = _violations(perm)
        if not bad:
            a += 1
        elif len(bad) == 1:
            b += 1
            pos[perm.index(n)] += 1
    return a, b, pos


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("RATSIGN_THREADS", "1")))
    except ValueError:
        return 1


def count_bruteforce(n: int) -> Tuple[int, int, List[int]]:
    """Exhaustive (A_n, B_n, [B_n^1..B_n^n]) over all n! permutations."""
    if n > BRUTEFORCE_LIMIT:
        raise SizeLimitError(f"brute force is limited to n <= {BRUTEFORCE_LIMIT}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1, 0, []
    with ThreadPoolExecutor(max_workers=_threads()) as ex:
        parts = list(ex.map(lambda first: _tally_chunk(n, first), range(1, n + 1)))
    a = sum(p[0] for p in parts)
    b = sum(p[1] for p in parts)
    pos = [sum(p[2][k] for p in parts) for k in range(n)]
    return a, b, pos


# generating series -------------------------------------------------------

U = -F - Q + Q * F * F + 2 * F * G
V = ONE - 2 * F * F - G + Q * F * G

_BASE = {"f": F, "g": G, "u": U, "v": V}


def base_series(which: str) -> GElement:
    try:
        return _BASE[which]
    except KeyError:
        raise ValueError(f"unknown base series {which!r}; expected one of f, g, u, v") from None


def broken_series(which: str, order: int):
    """u or v straight from the B_n recursion, as a TruncatedSeries."""
    from ratsign.algebra import TruncatedSeries
    from math import factorial

    parity = {"u": 1, "v": 0}[which]
    B = count_recursive(order).B
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(parity, order + 1, 2):
        coeffs[n] = Fraction((-1) ** (n // 2) * B[n], factorial(n))
    return TruncatedSeries(coeffs, order)


def verify_odes(order: int, u: Optional[GElement] = None, v: Optional[GElement] = None) -> bool:
    """Check u' = 2(g - fu - 1) and v' = -(f + fv + gu).

    The identities are tested in two ways: as exact GElement identities after
    multiplying through by q (so that D = q d/dq applies), and on truncated
    power series where ``u`` and ``v`` come from the alternation recursion.
    Passing a different ``u`` or ``v`` checks the closed forms only.
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    u_el = U if u is None else u
    v_el = V if v is None else v
    ok = apply_D(u_el) == Q * (2 * (G - F * u_el - 1))
    ok = ok and apply_D(v_el) == -(Q * (F + F * v_el + G * u_el))

    # series route: derivative loses the top coefficient, so expand one further
    N = order + 1
    fs, gs = expand(F, N), expand(G, N)
    if u is None and v is None:
        us, vs = broken_series("u", N), broken_series("v", N)
        ok = ok and us == expand(U, N) and vs == expand(V, N)
    else:
        us, vs = expand(u_el, N), expand(v_el, N)
    lhs_u = us.derivative()
    rhs_u = ((gs - fs * us) + (-1)) * 2
    lhs_v = vs.derivative()
    rhs_v = -(fs + fs * vs + gs * us)
    ok = ok and lhs_u == rhs_u.truncate(order) and lhs_v == rhs_v.truncate(order)
    return bool(ok)


# families ----------------------------------------------------------------

_FAMILIES = {
    # kind: (base series, shift of the first factor)
    "f_c": ("f", 1),
    "g_c": ("g", 0),
    "gt_c": ("g", 2),
    "u_c": ("u", 3),
    "v_c": ("v", 2),
}

FAMILY_ALIASES = {"g~_c": "gt_c", "g̃_c": "gt_c", "f": "f_c", "g": "g_c", "gt": "gt_c",
                  "u": "u_c", "v": "v_c"}


def _shifted(x: GElement, k: int) -> GElement:
    return apply_D(x) - k * x if k else apply_D(x)


@lru_cache(maxsize=None)
def family(kind: str, c: int) -> GElement:
    """Apply ``(D - s)(D - s - 2)...`` (c factors) to the base series, divided by 2^c c!.

    The first shift ``s`` is 1 for f_c, 0 for g_c, 2 for gt_c (g tilde),
    3 for u_c and 2 for v_c.
    """
    kind = FAMILY_ALIASES.get(kind, kind)
    if kind not in _FAMILIES:
        raise ValueError(f"unknown family {kind!r}")
    if c < 0:
        raise ValueError("c must be non-negative")
    if c == 0:
        return base_series(_FAMILIES[kind][0])
    start = _FAMILIES[kind][1]
    # the new factor is the one with the largest shift; the operators commute
    return _shifted(family(kind, c - 1), start + 2 * (c - 1)) * Fraction(1, 2 * c)
