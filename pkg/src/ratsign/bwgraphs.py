"""Real black-and-white graphs with a single 2-cycle.

A real graph is stored by its upper half only.  The real vertices
``v_1 .. v_n`` sit on the line from left to right with alternating colours;
the two conjugate cycle edges join ``v_c`` and ``v_{c+1}`` and replace the
real edge between them.  Every other non-real part of the graph is a pair of
conjugate trees hanging from a real vertex, and we keep the upper member as a
:class:`PlaneTree`.

Forests are listed counterclockwise starting from the rightward real
direction, so ``forest[0]`` is the pair closest to the positive real axis.
At an odd border vertex this is the pair that stays put under flips.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from ratsign.alternations import disorders

WHITE = "white"
BLACK = "black"
COLORS = (WHITE, BLACK)


def other(color: str) -> str:
    return BLACK if color == WHITE else WHITE


class TypeMismatchError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class PlaneTree:
    """A rooted plane tree; children are read counterclockwise after the parent edge."""

    color: str
    children: Tuple["PlaneTree", ...] = ()

    def __post_init__(self):
        for ch in self.children:
            if ch.color == self.color:
                raise ValueError("adjacent tree vertices must have different colours")

    @property
    def degree(self) -> int:
        return 1 + len(self.children)

    def degrees(self) -> Dict[str, List[int]]:
        out: Dict[str, List[int]] = {WHITE: [], BLACK: []}
        stack = [self]
        while stack:
            t = stack.pop()
            out[t.color].append(t.degree)
            stack.extend(t.children)
        return out

    def mirror(self) -> "PlaneTree":
        return PlaneTree(self.color, tuple(ch.mirror() for ch in reversed(self.children)))

    def to_json(self):
        return [self.color[0], [ch.to_json() for ch in self.children]]

    @classmethod
    def from_json(cls, obj) -> "PlaneTree":
        color = WHITE if obj[0] == "w" else BLACK
        return cls(color, tuple(cls.from_json(ch) for ch in obj[1]))


Forest = Tuple[PlaneTree, ...]


@dataclass(frozen=True)
class RealVertex:
    index: int
    color: str
    degree: int
    forest: Forest


@dataclass(frozen=True)
class SignBreakdown:
    lev: int
    pol: int
    sign: int


@dataclass(frozen=True)
class RealBwGraph:
    first_color: str
    forests: Tuple[Forest, ...]
    cycle_pos: int  # 1-based; the cycle joins v_c and v_{c+1}

    def __post_init__(self):
        n = len(self.forests)
        if n < 2:
            raise ValueError("a real bw-graph needs at least two real vertices")
        if not 1 <= self.cycle_pos <= n - 1:
            raise ValueError(f"cycle position {self.cycle_pos} out of range 1..{n - 1}")
        for i, forest in enumerate(self.forests):
            want = other(self.color(i + 1))
            for t in forest:
                if t.color != want:
                    raise ValueError("tree roots must have the opposite colour of their real vertex")

    @property
    def n(self) -> int:
        return len(self.forests)

    def color(self, i: int) -> str:
        """Colour of the 1-based real vertex ``v_i``."""
        return self.first_color if i % 2 == 1 else other(self.first_color)

    def base_degree(self, i: int) -> int:
        c, n = self.cycle_pos, self.n
        deg = 0
        if i > 1 and i != c + 1:
            deg += 1
        if i < n and i != c:
            deg += 1
        if i in (c, c + 1):
            deg += 2
        return deg

    def degree(self, i: int) -> int:
        return self.base_degree(i) + 2 * len(self.forests[i - 1])

    @property
    def real_vertices(self) -> Tuple[RealVertex, ...]:
        return tuple(RealVertex(i, self.color(i), self.degree(i), self.forests[i - 1])
                     for i in range(1, self.n + 1))

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(self.degree(i) for i in range(1, self.n + 1))

    def is_border(self, i: int) -> bool:
        return i in (1, self.n)

    def is_odd_border(self, i: int) -> bool:
        return self.is_border(i) and self.degree(i) % 2 == 1

    def movable(self, i: int) -> Forest:
        f = self.forests[i - 1]
        return f[1:] if self.is_odd_border(i) else f

    def fixed(self, i: int) -> Forest:
        f = self.forests[i - 1]
        return f[:1] if self.is_odd_border(i) else ()

    @property
    def side(self) -> str:
        return self.color(self.n)

    @property
    def is_short(self) -> bool:
        return self.cycle_pos in (1, self.n - 1)

    def vertex_degrees(self) -> Dict[str, List[int]]:
        out: Dict[str, List[int]] = {WHITE: [], BLACK: []}
        for i in range(1, self.n + 1):
            out[self.color(i)].append(self.degree(i))
            for t in self.forests[i - 1]:
                for col, ds in t.degrees().items():
                    out[col].extend(ds + ds)
        return out

    def type(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        d = self.vertex_degrees()
        return (tuple(sorted(d[WHITE], reverse=True)), tuple(sorted(d[BLACK], reverse=True)))

    def to_json(self) -> dict:
        return {
            "first_color": self.first_color,
            "cycle_pos": self.cycle_pos,
            "forests": [[t.to_json() for t in f] for f in self.forests],
        }

    @classmethod
    def from_json(cls, obj) -> "RealBwGraph":
        return cls(obj["first_color"],
                   tuple(tuple(PlaneTree.from_json(t) for t in f) for f in obj["forests"]),
                   obj["cycle_pos"])


# sequences and signs -----------------------------------------------------


def real_sequences(G: RealBwGraph) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(Sigma_w, Sigma_b): real degrees of each colour from left to right."""
    w = tuple(G.degree(i) for i in range(1, G.n + 1) if G.color(i) == WHITE)
    b = tuple(G.degree(i) for i in range(1, G.n + 1) if G.color(i) == BLACK)
    return w, b


def sign(G: RealBwGraph) -> SignBreakdown:
    sw, sb = real_sequences(G)
    lev = disorders(sw) + disorders(sb)
    pol = sum(1 for i in range(1, G.cycle_pos + 1) if G.degree(i) > 1)
    return SignBreakdown(lev, pol, -1 if (lev + pol) % 2 else 1)


# validation ----------------------------------------------------------------


def check_invariants(G: RealBwGraph) -> List[str]:
    """Return a list of violated structural invariants (empty when valid)."""
    problems = []
    for i in range(1, G.n + 1):
        if G.degree(i) < 1:
            problems.append(f"v_{i} has degree 0")
    d = G.vertex_degrees()
    n_vertices = len(d[WHITE]) + len(d[BLACK])
    n_edges = sum(d[WHITE])
    if sum(d[WHITE]) != sum(d[BLACK]):
        problems.append("white and black degree sums differ")
    if n_edges != n_vertices:
        problems.append("not unicyclic: edges and vertices differ")
    return problems


# enumeration ---------------------------------------------------------------

Pool = Tuple[Tuple[int, ...], Tuple[int, ...]]  # sorted white degrees, sorted black degrees


def _take(pool: Pool, color: str, deg: int) -> Pool:
    w, b = pool
    seq = list(w if color == WHITE else b)
    seq.remove(deg)
    t = tuple(seq)
    return (t, b) if color == WHITE else (w, t)


@lru_cache(maxsize=None)
def _forests(color: str, count: int, pool: Pool) -> Tuple[Tuple[Forest, Pool], ...]:
    """All ordered forests of ``count`` trees with root colour ``color`` drawn from ``pool``."""
    if count == 0:
        return (((), pool),)
    out = []
    available = pool[0] if color == WHITE else pool[1]
    for deg in sorted(set(available)):
        rest = _take(pool, color, deg)
        for children, rest2 in _forests(other(color), deg - 1, rest):
            tree = PlaneTree(color, children)
            for tail, rest3 in _forests(color, count - 1, rest2):
                out.append(((tree,) + tail, rest3))
    return tuple(out)


def _sub_multisets(parts: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """Split ``parts`` into (real, half of the rest) with the rest evenly paired."""
    counts = sorted(Counter(parts).items())

    def rec(k: int):
        if k == len(counts):
            yield (), ()
            return
        val, mult = counts[k]
        for real in range(mult % 2, mult + 1, 2):
            for r, h in rec(k + 1):
                yield (val,) * real + r, (val,) * ((mult - real) // 2) + h

    yield from rec(0)


def _distinct_perms(items: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    counts = Counter(items)
    n = len(items)

    def rec(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in sorted(counts):
            if counts[v]:
                counts[v] -= 1
                prefix.append(v)
                yield from rec(prefix)
                prefix.pop()
                counts[v] += 1

    yield from rec([])


def _normalize(parts: Sequence[int]) -> Tuple[int, ...]:
    p = tuple(sorted((int(x) for x in parts), reverse=True))
    if any(x < 1 for x in p):
        raise ValueError("partition parts must be positive")
    return p


def _graphs_for(first_color: str, c: int, real_w: Tuple[int, ...], real_b: Tuple[int, ...],
                pool: Pool) -> List[RealBwGraph]:
    n = len(real_w) + len(real_b)
    colors = [first_color if i % 2 == 1 else other(first_color) for i in range(1, n + 1)]
    probe = RealBwGraph(first_color, tuple(() for _ in range(n)), c)
    bases = [probe.base_degree(i) for i in range(1, n + 1)]
    w_pos = [i for i in range(n) if colors[i] == WHITE]
    b_pos = [i for i in range(n) if colors[i] == BLACK]
    out = []
    for pw in _distinct_perms(real_w):
        if any(d < bases[i] or (d - bases[i]) % 2 for d, i in zip(pw, w_pos)):
            continue
        for pb in _distinct_perms(real_b):
            if any(d < bases[i] or (d - bases[i]) % 2 for d, i in zip(pb, b_pos)):
                continue
            degs = [0] * n
            for d, i in zip(pw, w_pos):
                degs[i] = d
            for d, i in zip(pb, b_pos):
                degs[i] = d
            counts = [(degs[i] - bases[i]) // 2 for i in range(n)]

            def rec(i: int, pool_now: Pool, acc: List[Forest]):
                if i == n:
                    if not pool_now[0] and not pool_now[1]:
                        out.append(RealBwGraph(first_color, tuple(acc), c))
                    return
                for forest, rest in _forests(other(colors[i]), counts[i], pool_now):
                    acc.append(forest)
                    rec(i + 1, rest, acc)
                    acc.pop()

            rec(0, pool, [])
    return out


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("RATSIGN_THREADS", "1")))
    except ValueError:
        return 1


def enumerate_graphs(white: Sequence[int], black: Sequence[int]) -> List[RealBwGraph]:
    """Every real bw-graph whose white and black degrees are ``white`` and ``black``."""
    lw, lb = _normalize(white), _normalize(black)
    if sum(lw) != sum(lb):
        raise ValueError(f"partition sums differ: {sum(lw)} vs {sum(lb)}")
    d = sum(lw)
    if d < 2 or len(lw) + len(lb) != d:
        return []
    jobs = []
    for real_w, half_w in _sub_multisets(lw):
        for real_b, half_b in _sub_multisets(lb):
            nw, nb = len(real_w), len(real_b)
            if abs(nw - nb) > 1 or nw + nb < 2:
                continue
            # real base degrees add up to 2n, the rest is two per tree pair;
            # a tree with V vertices has degree sum 2V - 1
            k_trees = (sum(real_w) + sum(real_b) - 2 * (nw + nb)) // 2
            pool_size = len(half_w) + len(half_b)
            if sum(half_w) + sum(half_b) != 2 * pool_size - k_trees:
                continue
            pool = (tuple(sorted(half_w)), tuple(sorted(half_b)))
            firsts = [WHITE, BLACK] if nw == nb else ([WHITE] if nw > nb else [BLACK])
            for first in firsts:
                for c in range(1, nw + nb):
                    jobs.append((first, c, real_w, real_b, pool))
    with ThreadPoolExecutor(max_workers=_threads()) as ex:
        parts = list(ex.map(lambda job: _graphs_for(*job), jobs))
    return [g for part in parts for g in part]


def signed_sums(white: Sequence[int], black: Sequence[int]) -> Tuple[int, int]:
    s = {WHITE: 0, BLACK: 0}
    for G in enumerate_graphs(white, black):
        s[G.side] += sign(G).sign
    return s[WHITE], s[BLACK]


# flips, shifts, symmetry ----------------------------------------------------


def vertex_type(G: RealBwGraph, i: int) -> Optional[Tuple[str, int]]:
    deg = G.degree(i)
    if deg <= 1:
        return None
    return G.color(i), deg % 2


def permute_forests(G: RealBwGraph, mapping: Dict[int, int]) -> RealBwGraph:
    """Move the movable forest of ``v_i`` to ``v_mapping[i]`` for every key ``i``."""
    types = {vertex_type(G, i) for i in mapping}
    if None in types or len(types) != 1:
        raise TypeMismatchError("vertices must share colour and parity and have degree > 1")
    if sorted(mapping) != sorted(mapping.values()):
        raise ValueError("mapping must be a permutation of its keys")
    forests = list(G.forests)
    for src, dst in mapping.items():
        forests[dst - 1] = G.fixed(dst) + G.movable(src)
    return RealBwGraph(G.first_color, tuple(forests), G.cycle_pos)


def flip(G: RealBwGraph, v: int, w: int) -> RealBwGraph:
    """Exchange the forests at ``v_v`` and ``v_w`` (1-based indices)."""
    if v == w:
        raise TypeMismatchError("flip needs two distinct vertices")
    return permute_forests(G, {v: w, w: v})


def cyclic_shift(G: RealBwGraph, vertices: Sequence[int]) -> RealBwGraph:
    """Move the forest of ``vertices[i]`` to ``vertices[i+1]`` and the last one to the first."""
    vs = sorted(vertices)
    if len(vs) < 2:
        return G
    return permute_forests(G, {vs[i]: vs[(i + 1) % len(vs)] for i in range(len(vs))})


def _reduced_positions(seq: Sequence[int]) -> List[int]:
    pos = [k for k in range(len(seq)) if seq[k] != 1]
    if len(pos) % 2:
        pos = pos[1:]
    return pos


def first_nonsymmetric(seq: Sequence[int]) -> Optional[Tuple[int, int]]:
    """Indices into ``seq`` of the first non-symmetric pair, or None when nearly symmetric."""
    pos = _reduced_positions(seq)
    m = len(pos) // 2
    for k in range(m):
        a, b = pos[m - 1 - k], pos[m + k]
        if seq[a] != seq[b]:
            return a, b
    return None


def is_nearly_symmetric_sequence(seq: Sequence[int]) -> bool:
    return first_nonsymmetric(seq) is None


def class_vertices(G: RealBwGraph, color: str, parity: int) -> List[int]:
    return [i for i in range(1, G.n + 1) if G.color(i) == color and G.degree(i) % 2 == parity]


CLASS_ORDER = ((WHITE, 0), (WHITE, 1), (BLACK, 0), (BLACK, 1))


def nearly_symmetric(G: RealBwGraph) -> Union[bool, Tuple[int, int]]:
    """True, or the first non-symmetric pair ``(v, w)`` of 1-based vertex indices."""
    for color, parity in CLASS_ORDER:
        vs = class_vertices(G, color, parity)
        hit = first_nonsymmetric([G.degree(i) for i in vs])
        if hit is not None:
            return vs[hit[0]], vs[hit[1]]
    return True


def is_nearly_symmetric(G: RealBwGraph) -> bool:
    return nearly_symmetric(G) is True


def symmetrize(G: RealBwGraph) -> RealBwGraph:
    """Flip at the first non-symmetric pair."""
    pair = nearly_symmetric(G)
    if pair is True:
        raise PreconditionError("graph is nearly symmetric")
    return flip(G, *pair)


def odd_sequence(G: RealBwGraph, color: str) -> Tuple[int, ...]:
    return tuple(G.degree(i) for i in class_vertices(G, color, 1))


def _is_reduced_odd(seq: Tuple[int, ...]) -> bool:
    if len(seq) == 1:
        return seq[0] != 1
    if len(seq) == 3:
        a, b, c = seq
        if a == 1 and c == 1:
            return b != 1
        return a != 1 and b != 1 and b == c
    return False


def is_reduced(G: RealBwGraph) -> bool:
    return is_nearly_symmetric(G) and all(_is_reduced_odd(odd_sequence(G, col)) for col in COLORS)


def rotation_flips_sign(G: RealBwGraph) -> bool:
    """Predicted sign change of a rotation: some odd sequence is (1,b,b), (b,b,1) or (1)."""
    for col in COLORS:
        s = odd_sequence(G, col)
        if s == (1,):
            return True
        if len(s) == 3 and ((s[0] == 1 and s[1] == s[2] != 1) or (s[2] == 1 and s[0] == s[1] != 1)):
            return True
    return False


def reverse(G: RealBwGraph) -> RealBwGraph:
    """Rotation by 180 degrees without any shift."""
    forests = tuple(tuple(t.mirror() for t in reversed(f)) for f in reversed(G.forests))
    return RealBwGraph(G.color(G.n), forests, G.n - G.cycle_pos)


def rotate(G: RealBwGraph) -> RealBwGraph:
    """Rotate by 180 degrees, then cyclically shift every class that lost near symmetry."""
    if not is_nearly_symmetric(G):
        raise PreconditionError("rotation is defined on nearly symmetric graphs only")
    H = reverse(G)
    for color, parity in CLASS_ORDER:
        vs = class_vertices(H, color, parity)
        if is_nearly_symmetric_sequence([H.degree(i) for i in vs]):
            continue
        H = cyclic_shift(H, [i for i in vs if H.degree(i) != 1])
    return H


# bulk checks ---------------------------------------------------------------


def partitions(d: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, max_part), 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


def all_graphs(d: int) -> Iterator[RealBwGraph]:
    for lw in partitions(d):
        for lb in partitions(d):
            yield from enumerate_graphs(lw, lb)


def flip_rotation_violations(d: int) -> List[str]:
    """Check the flip and rotation properties on every graph of degree ``d``.

    Flip at the first non-symmetric pair must negate the sign and undo
    itself.  Rotation must stay inside the set of nearly symmetric graphs of
    the same type and be an involution; its sign change follows
    :func:`rotation_flips_sign`.  For even ``d`` it swaps the side, and for
    odd ``d`` it reverses the sign of every non-reduced graph.
    """
    bad: List[str] = []
    for lw in partitions(d):
        for lb in partitions(d):
            graphs = enumerate_graphs(lw, lb)
            universe = set(graphs)
            for G in graphs:
                s = sign(G).sign
                if not is_nearly_symmetric(G):
                    H = symmetrize(G)
                    if sign(H).sign != -s:
                        bad.append(f"flip keeps sign: {G.to_json()}")
                    if symmetrize(H) != G:
                        bad.append(f"flip is not an involution: {G.to_json()}")
                    continue
                R = rotate(G)
                if R not in universe:
                    bad.append(f"rotation leaves the graph set: {G.to_json()}")
                    continue
                if not is_nearly_symmetric(R) or rotate(R) != G:
                    bad.append(f"rotation is not an involution: {G.to_json()}")
                flipped = sign(R).sign == -s
                if flipped != rotation_flips_sign(G):
                    bad.append(f"rotation sign rule fails: {G.to_json()}")
                if d % 2 == 0 and R.side == G.side:
                    bad.append(f"rotation keeps the side: {G.to_json()}")
                if d % 2 == 1 and not is_reduced(G) and not flipped:
                    bad.append(f"rotation keeps sign of non-reduced graph: {G.to_json()}")
    return bad


def verify_invariance(d: int) -> List[Tuple[Tuple[int, ...], Tuple[int, ...], int, int]]:
    """Signed sums for every ordered pair of partitions of ``d``; returns the mismatches."""
    bad = []
    for lw in partitions(d):
        for lb in partitions(d):
            sw, sb = signed_sums(lw, lb)
            if sw != sb:
                bad.append((lw, lb, sw, sb))
    return bad


def graph_report(G: RealBwGraph) -> dict:
    s = sign(G)
    sw, sb = real_sequences(G)
    return {
        "encoding": G.to_json(),
        "sigma_w": list(sw),
        "sigma_b": list(sb),
        "lev": s.lev,
        "pol": s.pol,
        "sign": s.sign,
        "side": G.side,
    }
