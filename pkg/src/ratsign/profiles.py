"""Reduced ramification profiles, their statistics, and simple bases.

A profile ``lam`` is a tuple of partitions, one per non-simple critical
level; partition ``j`` belongs to label ``j`` (1-based).  Entries are
*reduced* ramification indices, so an entry ``x`` stands for a critical point
of ramification ``x + 1``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ratsign.alternations import disorders

ODD = "odd"
EVEN = "even"

Partition = Tuple[int, ...]


def normalize_partition(parts: Sequence[int]) -> Partition:
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if any(x < 1 for x in p):
        raise ValueError(f"partition entries must be positive: {parts}")
    return p


@dataclass(frozen=True)
class ReducedProfiles:
    partitions: Tuple[Partition, ...]
    parity: str = ODD

    def __post_init__(self):
        if self.parity not in (ODD, EVEN):
            raise ValueError("parity must be 'odd' or 'even'")
        object.__setattr__(self, "partitions",
                           tuple(normalize_partition(p) for p in self.partitions))

    @classmethod
    def parse(cls, text: str, parity: str = ODD) -> "ReducedProfiles":
        """Parse ``"3,2,1,1;3,2,2"``; an empty string is the empty profile."""
        text = text.strip()
        if not text:
            return cls((), parity)
        parts = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            parts.append(tuple(int(x) for x in chunk.split(",")) if chunk else ())
        return cls(tuple(parts), parity)

    def with_parity(self, parity: str) -> "ReducedProfiles":
        return ReducedProfiles(self.partitions, parity)

    def to_text(self) -> str:
        return ";".join(",".join(str(x) for x in p) for p in self.partitions)

    @property
    def total(self) -> int:
        return sum(sum(p) for p in self.partitions)


@dataclass(frozen=True)
class ProfileStats:
    c_frak: int
    o_frak: int
    e_frak: int
    b_frak: int
    A: int


def _odd_times(p: Partition) -> Tuple[List[int], List[int]]:
    cnt = Counter(p)
    odd = sorted(x for x, n in cnt.items() if n % 2 and x % 2)
    even = sorted(x for x, n in cnt.items() if n % 2 and x % 2 == 0)
    return odd, even


def stats(lam: ReducedProfiles) -> ProfileStats:
    c = o = e = b = 0
    A = 1
    for p in lam.partitions:
        cnt = Counter(p)
        c += sum(n // 2 for n in cnt.values())
        A *= prod(n // 2 for n in cnt.values() if n >= 2)
        odd, even = _odd_times(p)
        o += bool(odd)
        e += bool(even)
        if odd and even and max(even) > max(odd):
            b += 1
    return ProfileStats(c, o, e, b, A)


# vanishing ------------------------------------------------------------------

PER_PARTITION = "per-partition"
ODD_EVEN_COUNT = "odd-even-count"


def trivially_vanishes(lam: ReducedProfiles) -> Optional[str]:
    """None, or the reason why the generating series of this parity is zero.

    ``"per-partition"``: some partition has two odd, or two even, entries
    appearing an odd number of times (kills both parities).
    ``"odd-even-count"``: parity odd and an odd number of partitions carry
    an even entry an odd number of times.
    """
    evens = 0
    for p in lam.partitions:
        odd, even = _odd_times(p)
        if len(odd) > 1 or len(even) > 1:
            return PER_PARTITION
        evens += bool(even)
    if lam.parity == ODD and evens % 2:
        return ODD_EVEN_COUNT
    return None


def nonvanishing(lam: ReducedProfiles) -> bool:
    """The iff criterion, evaluated directly from the two listed conditions."""
    each_ok = all(len(o) <= 1 and len(e) <= 1 for o, e in map(_odd_times, lam.partitions))
    if lam.parity == EVEN:
        return each_ok
    exactly_one_even = sum(1 for p in lam.partitions if len(_odd_times(p)[1]) == 1)
    return each_ok and exactly_one_even % 2 == 0


# degree bounds ----------------------------------------------------------------


def degree_bounds(lam: ReducedProfiles) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """(bound on deg_f, bound on deg_g) for the stored parity."""
    s = stats(lam)
    top = s.c_frak + s.o_frak + 2
    if lam.parity == ODD:
        return (s.c_frak + 1, top), (s.c_frak, top)
    return (s.c_frak, top), (s.c_frak + 1, top)


# simple bases -----------------------------------------------------------------

# layout items
MAX = "max"
SPECIAL = "special"
PAIR = "pair"

# crossing positions
LEFT = "left"
RIGHT = "right"
INC = "inc"
DEC = "dec"

# type-B orientations of the special segment: pole on its right or on its left
POLE_RIGHT = "[x,p)"
POLE_LEFT = "(p,y]"


@dataclass(frozen=True)
class SimpleBase:
    """A simple base described through its real line and its upper components.

    ``layout`` lists, from left to right, the ordinary segments (``("max", j)``),
    the special segment (``("special",)``, type B only) and the upper
    components (``("pair", j, x)``); an upper component sits in the chain
    between the segments surrounding it.  ``crossings`` maps a label to its
    position: ``("left",)``, ``("right",)``, ``("special",)`` or
    ``("seg", k, "inc"|"dec")`` for the k-th segment (1-based, segments only).
    """

    base_type: str
    parity: str
    layout: Tuple[tuple, ...]
    sp: int
    orientation: Optional[str]
    crossings: Tuple[Tuple[int, tuple], ...]
    maxima: Tuple[Tuple[int, int], ...]  # (label, reduced entry)
    crossing_entries: Tuple[Tuple[int, int], ...]  # (label, reduced entry)
    k: int

    @property
    def segments(self) -> List[tuple]:
        return [it for it in self.layout if it[0] != PAIR]

    @property
    def n_chains(self) -> int:
        return len(self.segments) + 1

    def chain_counts(self) -> Tuple[int, ...]:
        counts = [0] * self.n_chains
        seen = 0
        for it in self.layout:
            if it[0] == PAIR:
                counts[seen] += 1
            else:
                seen += 1
        return tuple(counts)

    def class_key(self) -> tuple:
        return (self.layout, self.sp, self.orientation)

    def groups(self) -> Dict[int, List[List[int]]]:
        """Per label, ramification indices of real vertices in ``l + 1`` groups.

        Group 0 is the left end (empty for even degree), groups 1..l-1 the
        segments in order and group l the right end.
        """
        cross = dict(self.crossings)
        cross_ram = {j: x + 1 for j, x in self.crossing_entries}
        max_of = {j: x for j, x in self.maxima}

        def at(j: int, where: tuple) -> int:
            return cross_ram[j] if cross.get(j) == where else 1

        out: Dict[int, List[List[int]]] = {}
        for j in range(1, self.k + 1):
            gs: List[List[int]] = [[at(j, (LEFT,))] if self.parity == ODD else []]
            for idx, seg in enumerate(self.segments, start=1):
                if seg[0] == SPECIAL:
                    gs.append([at(j, (SPECIAL,))])
                    continue
                top = seg[1]
                if j < top:
                    gs.append([at(j, ("seg", idx, INC)), at(j, ("seg", idx, DEC))])
                elif j == top:
                    gs.append([max_of[j] + 1])
                else:
                    gs.append([])
            gs.append([at(j, (RIGHT,))])
            out[j] = gs
        return out

    def sequences(self) -> Dict[int, List[int]]:
        """Per-label sign sequences, with the pole's 1 inserted for type B."""
        out = {}
        for j, gs in self.groups().items():
            seq: List[int] = []
            for t, g in enumerate(gs):
                if self.base_type == "B" and t == self.sp:
                    seq.append(1)
                seq.extend(g)
            out[j] = seq
        return out

    @property
    def sign(self) -> int:
        total = sum(disorders(s) for s in self.sequences().values())
        return -1 if total % 2 else 1


def _label_data(lam: ReducedProfiles):
    maxima, crosses, pairs = [], [], []
    for j, p in enumerate(lam.partitions, start=1):
        odd, even = _odd_times(p)
        if len(odd) > 1 or len(even) > 1:
            return None
        if odd:
            maxima.append((j, odd[0]))
        if even:
            crosses.append((j, even[0]))
        for x, n in sorted(Counter(p).items()):
            pairs.extend([(PAIR, j, x)] * (n // 2))
    return maxima, crosses, pairs


def _distinct_orders(items: Sequence[tuple]) -> Iterator[Tuple[tuple, ...]]:
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                prefix.append(key)
                yield from rec(prefix)
                prefix.pop()
                counts[key] += 1

    yield from rec([])


def _crossing_positions(j: int, segments: Sequence[tuple], parity: str,
                        has_special: bool) -> List[tuple]:
    pos: List[tuple] = []
    if parity == ODD:
        pos.append((LEFT,))
    for idx, seg in enumerate(segments, start=1):
        if seg[0] == MAX and seg[1] > j:
            pos.extend([("seg", idx, INC), ("seg", idx, DEC)])
    if has_special:
        pos.append((SPECIAL,))
    pos.append((RIGHT,))
    return pos


def enumerate_simple_bases(lam: ReducedProfiles, base_type: str) -> List[Tuple[SimpleBase, int]]:
    """All simple bases of type ``"B"`` or ``"C"`` with their signs."""
    if base_type not in ("B", "C"):
        raise ValueError("simple bases are of type B or C")
    data = _label_data(lam)
    if data is None:
        return []
    maxima, crosses, pairs = data
    if base_type == "B" and not crosses:
        return []
    items = [(MAX, j) for j, _ in maxima] + pairs
    if base_type == "B":
        items.append((SPECIAL,))
    out = []
    for layout in _distinct_orders(items):
        segments = [it for it in layout if it[0] != PAIR]
        l = len(segments) + 1
        if base_type == "C":
            frames = [(sp, None) for sp in range(1, l + 1)]
        else:
            t = segments.index((SPECIAL,)) + 1
            frames = [(t + 1, POLE_RIGHT), (t, POLE_LEFT)]
        options = [_crossing_positions(j, segments, lam.parity, base_type == "B")
                   for j, _ in crosses]
        for sp, orientation in frames:
            for choice in itertools.product(*options):
                if base_type == "B" and (SPECIAL,) not in choice:
                    continue
                base = SimpleBase(base_type, lam.parity, layout, sp, orientation,
                                  tuple((j, pos) for (j, _), pos in zip(crosses, choice)),
                                  tuple(maxima), tuple(crosses), len(lam.partitions))
                out.append((base, base.sign))
    return out


def signed_sum(bases: Sequence[Tuple[SimpleBase, int]]) -> int:
    return sum(s for _, s in bases)


def class_count(bases: Sequence[Tuple[SimpleBase, int]]) -> int:
    return len({b.class_key() for b, _ in bases})


def simple_base_counts_closed(lam: ReducedProfiles) -> Tuple[Fraction, Optional[Fraction]]:
    """Closed formulas (o+1)(o+c)!/A and, for odd parity with e > 0, 2(o+c+1)!/A."""
    s = stats(lam)
    count_c = Fraction((s.o_frak + 1) * factorial(s.o_frak + s.c_frak), s.A)
    count_b = None
    if lam.parity == ODD and s.e_frak > 0:
        count_b = Fraction(2 * factorial(s.o_frak + s.c_frak + 1), s.A)
    return count_c, count_b


def expected_class_sign(lam: ReducedProfiles) -> int:
    s = stats(lam)
    return -1 if (s.o_frak + s.b_frak) % 2 else 1


# leading coefficients --------------------------------------------------------


@dataclass(frozen=True)
class LeadingTerm:
    side: str  # "f" or "g"
    degree: Tuple[int, int]
    coefficient: Fraction


def leading_coefficients(lam: ReducedProfiles) -> Tuple[LeadingTerm, LeadingTerm]:
    """Coefficients at the extremal f- and g-monomials for the stored parity.

    Uses the signed sums of enumerated simple bases of that parity, scaled
    by (-1)^c / 2^c.
    """
    s = stats(lam)
    S_C = signed_sum(enumerate_simple_bases(lam, "C"))
    S_B = signed_sum(enumerate_simple_bases(lam, "B"))
    scale = Fraction((-1) ** s.c_frak, 2 ** s.c_frak)
    f_deg, g_deg = degree_bounds(lam)
    if lam.parity == ODD:
        return (LeadingTerm("f", f_deg, scale * S_C),
                LeadingTerm("g", g_deg, scale * (S_B + 2 * S_C)))
    return (LeadingTerm("f", f_deg, scale * (-S_B - 2 * S_C)),
            LeadingTerm("g", g_deg, scale * S_C))


def assembled_leading_coefficients(lam: ReducedProfiles) -> Tuple[LeadingTerm, LeadingTerm]:
    """The same two coefficients, read off the sum of F_B over all simple bases.

    Every simple base is turned into a base descriptor, its series F_B is
    assembled from the families f_c, g_c, ..., and the coefficients of the
    extremal monomials are summed.  This does not rely on any claim about
    leading coefficients of the families.
    """
    from ratsign.snumbers import assemble_FB, descriptor_from_simple_base

    f_deg, g_deg = degree_bounds(lam)
    f_key = f_deg
    g_key = (g_deg[0], g_deg[1] - 1)
    f_sum = Fraction(0)
    g_sum = Fraction(0)
    for t in ("B", "C"):
        for base, _ in enumerate_simple_bases(lam, t):
            F = assemble_FB(descriptor_from_simple_base(base))
            f_sum += F.f_part.get(f_key, 0)
            g_sum += F.g_part.get(g_key, 0)
    return LeadingTerm("f", f_deg, f_sum), LeadingTerm("g", g_deg, g_sum)


def random_profile(rng, max_parts: int = 5, max_entry: int = 4,
                   max_partitions: int = 3, parity: Optional[str] = None) -> ReducedProfiles:
    """A random profile for property tests; ``rng`` is a ``random.Random``."""
    k = rng.randint(0, max_partitions)
    parts = []
    budget = max_parts
    for _ in range(k):
        n = rng.randint(1, max(1, budget)) if budget > 0 else 0
        budget -= n
        parts.append(tuple(rng.randint(1, max_entry) for _ in range(n)))
    parts = [p for p in parts if p]
    return ReducedProfiles(tuple(parts), parity or rng.choice([ODD, EVEN]))
