"""Base descriptors, the series F_B, and S-numbers for the empty profile."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from ratsign.algebra import GElement, degrees, expand, leading_coefficient
from ratsign.alternations import base_series, count_recursive, disorders, family
from ratsign.profiles import EVEN, ODD, ReducedProfiles

BASE_TYPES = ("A", "B", "C")


class InvalidDescriptorError(ValueError):
    pass


class NonIntegralCoefficientError(ArithmeticError):
    pass


class InsufficientDataError(ValueError):
    pass


def broken_alternation_sign(n: int) -> int:
    """Sign of every dessin counted by B_n: (-1)^floor(n/2)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return -1 if (n // 2) % 2 else 1


@dataclass(frozen=True)
class BaseDescriptor:
    """Combinatorial data of a base.

    ``c[i-1]`` counts the upper components adjacent to chain ``i``.  For each
    label, ``labeled_real_vertices`` holds ``l + 1`` groups of ramification
    indices: group 0 is the left end (empty in even degree), group ``t`` for
    ``0 < t < l`` the real component between chains ``t`` and ``t + 1``, and
    group ``l`` the right end.
    """

    base_type: str
    parity: str
    sp: int
    c: Tuple[int, ...]
    labeled_real_vertices: Tuple[Tuple[Tuple[int, ...], ...], ...] = ()

    @property
    def l(self) -> int:
        return len(self.c)

    def validate(self) -> None:
        if self.base_type not in BASE_TYPES:
            raise InvalidDescriptorError(f"unknown base type {self.base_type!r}")
        if self.parity not in (ODD, EVEN):
            raise InvalidDescriptorError("parity must be 'odd' or 'even'")
        if self.l < 1:
            raise InvalidDescriptorError("a base has at least one chain")
        if not 1 <= self.sp <= self.l:
            raise InvalidDescriptorError(f"special chain {self.sp} out of range 1..{self.l}")
        if any(ci < 0 for ci in self.c):
            raise InvalidDescriptorError("chain counts must be non-negative")
        if self.base_type == "A":
            if self.c[self.sp - 1] != 0:
                raise InvalidDescriptorError("type A needs no upper components at the special chain")
            if self.parity == EVEN and self.sp == 1:
                raise InvalidDescriptorError("type A in even degree cannot have sp = 1")
        for groups in self.labeled_real_vertices:
            if len(groups) != self.l + 1:
                raise InvalidDescriptorError("each label needs l + 1 groups of real vertices")
            if self.parity == EVEN and groups[0]:
                raise InvalidDescriptorError("even degree has no left end")
            if any(x < 1 for g in groups for x in g):
                raise InvalidDescriptorError("ramification indices are positive")

    def to_json(self) -> dict:
        return {
            "base_type": self.base_type,
            "parity": self.parity,
            "sp": self.sp,
            "c": list(self.c),
            "labeled_real_vertices": [[list(g) for g in groups]
                                      for groups in self.labeled_real_vertices],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BaseDescriptor":
        try:
            return cls(obj["base_type"], obj["parity"], int(obj["sp"]),
                       tuple(int(x) for x in obj["c"]),
                       tuple(tuple(tuple(int(x) for x in g) for g in groups)
                             for groups in obj.get("labeled_real_vertices", [])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidDescriptorError(f"malformed descriptor: {exc}") from exc


def sign_sequences(B: BaseDescriptor) -> List[List[int]]:
    out = []
    for groups in B.labeled_real_vertices:
        seq: List[int] = []
        for t, g in enumerate(groups):
            if B.base_type in ("A", "B") and t == B.sp:
                seq.append(1)
            seq.extend(g)
        out.append(seq)
    return out


def epsilon_base(B: BaseDescriptor) -> int:
    B.validate()
    total = sum(disorders(s) for s in sign_sequences(B))
    return -1 if total % 2 else 1


def _prod(factors: Sequence[GElement]) -> GElement:
    out = GElement.const(1)
    for x in factors:
        out = out * x
    return out


def assemble_FB(B: BaseDescriptor) -> GElement:
    eps = epsilon_base(B)
    c, sp, l = B.c, B.sp, B.l

    def fs(skip: Sequence[int]) -> List[GElement]:
        return [family("f_c", c[i - 1]) for i in range(1, l + 1) if i not in skip]

    if B.parity == ODD:
        if B.base_type == "A":
            core = fs([sp])
        elif B.base_type == "B":
            core = [family("gt_c", c[sp - 1])] + fs([sp])
        else:
            core = [family("u_c", c[sp - 1])] + fs([sp])
        return eps * _prod(core)
    if B.base_type == "A":
        return eps * _prod([family("g_c", c[0])] + fs([1, sp]))
    if B.base_type == "B":
        if sp == 1:
            return -eps * _prod([family("f_c", c[0])] + fs([1]))
        return eps * _prod([family("g_c", c[0]), family("gt_c", c[sp - 1])] + fs([1, sp]))
    if sp == 1:
        return eps * _prod([family("v_c", c[0])] + fs([1]))
    return eps * _prod([family("g_c", c[0]), family("u_c", c[sp - 1])] + fs([1, sp]))


def stated_leading_terms(B: BaseDescriptor):
    """The claimed degrees and leading coefficients of F_B for each base type.

    Returns ``(deg_f, deg_g, coeff_f, coeff_g)`` with ``None`` for a vanishing
    side.  All coefficients are eps (-1)^c / 2^c except three marked cells.
    """
    eps = epsilon_base(B)
    c, l = sum(B.c), B.l
    base = Fraction(eps * (-1) ** c, 2 ** c)
    if B.parity == ODD:
        if B.base_type == "A":
            return (c, c + l - 1), None, base, None
        if B.base_type == "B":
            return None, (c, c + l), None, base
        return (c + 1, c + l + 1), (c, c + l + 1), base, 2 * base
    if B.base_type == "A":
        return None, (c, c + l - 1), None, base
    if B.base_type == "B":
        return (c, c + l), None, -base, None
    return (c, c + l + 1), (c + 1, c + l + 1), -2 * base, base


def observed_leading_terms(F: GElement):
    deg_f, deg_g = degrees(F)
    cf = leading_coefficient(F, "f") if deg_f is not None else None
    cg = leading_coefficient(F, "g") if deg_g is not None else None
    return deg_f, deg_g, cf, cg


def descriptor_from_simple_base(base) -> BaseDescriptor:
    groups = base.groups()
    return BaseDescriptor(
        base.base_type, base.parity, base.sp, base.chain_counts(),
        tuple(tuple(tuple(g) for g in groups[j]) for j in sorted(groups)))


def random_descriptor(rng, max_chains: int = 4, max_c: int = 3, max_labels: int = 3) -> BaseDescriptor:
    """A random valid descriptor; ``rng`` is a ``random.Random``."""
    parity = rng.choice([ODD, EVEN])
    t = rng.choice(BASE_TYPES)
    low = 2 if (t == "A" and parity == EVEN) else 1
    l = rng.randint(low, max(low, max_chains))
    sp = rng.randint(2 if (t == "A" and parity == EVEN) else 1, l)
    c = [rng.randint(0, max_c) for _ in range(l)]
    if t == "A":
        c[sp - 1] = 0
    labels = []
    for _ in range(rng.randint(0, max_labels)):
        groups = []
        for g in range(l + 1):
            if g == 0 and parity == EVEN:
                groups.append(())
            else:
                groups.append(tuple(rng.randint(1, 5) for _ in range(rng.randint(0, 2))))
        labels.append(tuple(groups))
    return BaseDescriptor(t, parity, sp, tuple(c), tuple(labels))


# S-numbers --------------------------------------------------------------------


def extract_s_numbers(F: GElement, max_m: int) -> List[int]:
    """m! times the coefficient of q^m, for m = 0..max_m."""
    if max_m < 0:
        raise ValueError("max_m must be non-negative")
    series = expand(F, max_m)
    out = []
    for m, coeff in enumerate(series.coeffs):
        v = coeff * factorial(m)
        if v.denominator != 1:
            raise NonIntegralCoefficientError(f"m = {m}: {v} is not an integer")
        out.append(int(v))
    return out


@dataclass
class SNumberReport:
    lam: ReducedProfiles
    values: List[Tuple[int, int]]
    series_used: GElement
    diagnostics: Dict[str, object] = field(default_factory=dict)

    @property
    def parity(self) -> str:
        return self.lam.parity

    def to_json(self) -> dict:
        from ratsign.algebra import gelement_to_json

        return {
            "lambda": self.lam.to_text(),
            "parity": self.parity,
            "values": [[m, str(s)] for m, s in self.values],
            "series": gelement_to_json(self.series_used),
            "diagnostics": self.diagnostics,
        }


def s_numbers_empty(max_m: int, parity: str = ODD) -> SNumberReport:
    """S(empty, m) for m of the given parity up to ``max_m``, from u or v.

    The values are checked against (-1)^floor(m/2) B_m from the recursion.
    """
    if max_m < 0:
        raise ValueError("max_m must be non-negative")
    if parity not in (ODD, EVEN):
        raise ValueError("parity must be 'odd' or 'even'")
    F = base_series("u" if parity == ODD else "v")
    values = extract_s_numbers(F, max_m)
    B = count_recursive(max_m).B
    start = 1 if parity == ODD else 0
    pairs = []
    mismatches = []
    for m in range(start, max_m + 1, 2):
        expected = (-1) ** (m // 2) * B[m]
        if values[m] != expected:
            mismatches.append(m)
        pairs.append((m, values[m]))
    report = SNumberReport(ReducedProfiles((), parity), pairs, F)
    report.diagnostics["recursion_mismatches"] = mismatches
    return report


# asymptotics ----------------------------------------------------------------


@dataclass
class GrowthDiagnostics:
    log_ratios: List[Tuple[int, float]]  # (m, ln|S| / (m ln m))
    naive_ratios: List[Tuple[int, float]]  # (k, |b_{k+1} / b_k|)
    corrected_ratios: List[Tuple[int, float]]  # (k, |b_{k+1} / b_k| * k / (k+1))
    radius_naive: float
    radius_corrected: float

    def to_json(self) -> dict:
        return {
            "log_ratios": [[m, r] for m, r in self.log_ratios],
            "naive_ratios": [[k, r] for k, r in self.naive_ratios],
            "corrected_ratios": [[k, r] for k, r in self.corrected_ratios],
            "radius_naive": self.radius_naive,
            "radius_corrected": self.radius_corrected,
        }


def ratio_diagnostics(b: Dict[int, Fraction]) -> Tuple[List[Tuple[int, float]], List[Tuple[int, float]]]:
    """Naive and double-pole corrected ratios of consecutive coefficients ``b[k]``."""
    naive, corrected = [], []
    for k in sorted(b):
        if k + 1 in b and b[k] and k > 0:
            r = abs(Fraction(b[k + 1]) / Fraction(b[k]))
            naive.append((k, float(r)))
            corrected.append((k, float(r * Fraction(k, k + 1))))
    return naive, corrected


def asymptotic_report(report: SNumberReport) -> GrowthDiagnostics:
    nonzero = [(m, s) for m, s in report.values if s]
    if len(nonzero) < 10:
        raise InsufficientDataError("need at least 10 non-zero values")
    log_ratios = [(m, math.log(abs(s)) / (m * math.log(m))) for m, s in nonzero if m >= 2]
    # after dividing odd series by q, b_k is the coefficient of Q^k with Q = q^2
    b = {m // 2: Fraction(s, factorial(m)) for m, s in report.values}
    naive, corrected = ratio_diagnostics(b)
    return GrowthDiagnostics(log_ratios, naive, corrected,
                             1 / naive[-1][1], 1 / corrected[-1][1])


def complex_reference(m: int) -> int:
    """The genus-zero single Hurwitz number (m-1)^(m-1)."""
    if m < 2:
        raise ValueError("defined for m >= 2")
    return (m - 1) ** (m - 1)
