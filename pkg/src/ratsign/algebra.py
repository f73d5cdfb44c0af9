"""Exact arithmetic in Q[q, f] + Q[q, f] g with f = tanh(q), g = sech(q).

Every element is stored in g-reduced form ``P1 + P2 * g`` where ``P1`` and
``P2`` are sparse polynomials in ``q`` and ``f``; the relation
``f**2 + g**2 = 1`` removes all higher powers of ``g``.  Coefficients are
:class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

BiDegree = Tuple[int, int]
QFPoly = Dict[BiDegree, Fraction]

# lexicographic order on (q-exponent, f-exponent) is plain tuple order;
# ``None`` stands for the degree of the zero polynomial and sits below everything
ZERO_DEGREE = None


class ZeroPartError(ValueError):
    """Raised when a leading coefficient is requested from a vanishing part."""


class InsufficientOrderError(ValueError):
    """Raised when a truncation order cannot support the requested rank test."""


def _clean(terms: Mapping[BiDegree, object]) -> QFPoly:
    out: QFPoly = {}
    for (i, j), c in terms.items():
        if i < 0 or j < 0:
            raise ValueError(f"negative exponent in monomial {(i, j)}")
        c = Fraction(c)
        if c:
            out[(int(i), int(j))] = c
    return out


def _poly_add(a: QFPoly, b: QFPoly, scale: Fraction = Fraction(1)) -> QFPoly:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + scale * c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _poly_mul(a: QFPoly, b: QFPoly) -> QFPoly:
    out: QFPoly = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _poly_one_minus_f2(a: QFPoly) -> QFPoly:
    """Multiply by ``1 - f**2`` (the value of ``g**2``)."""
    out = dict(a)
    for (i, j), c in a.items():
        k = (i, j + 2)
        v = out.get(k, 0) - c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def poly_degree(p: Mapping[BiDegree, Fraction]) -> Optional[BiDegree]:
    return max(p) if p else ZERO_DEGREE


class GElement:
    """An element ``f_part + g_part * g`` of Q[q, f, g] in g-reduced form.

    Instances are immutable and hashable.  Arithmetic with ints and
    Fractions is supported on either side.
    """

    __slots__ = ("_f", "_g", "_key")

    def __init__(self, f_part: Optional[Mapping[BiDegree, object]] = None,
                 g_part: Optional[Mapping[BiDegree, object]] = None):
        self._f = _clean(f_part or {})
        self._g = _clean(g_part or {})
        self._key = (tuple(sorted(self._f.items())), tuple(sorted(self._g.items())))

    @classmethod
    def _raw(cls, f: QFPoly, g: QFPoly) -> "GElement":
        obj = cls.__new__(cls)
        obj._f = f
        obj._g = g
        obj._key = (tuple(sorted(f.items())), tuple(sorted(g.items())))
        return obj

    @classmethod
    def const(cls, c) -> "GElement":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, with_g: bool = False, coeff=1) -> "GElement":
        if with_g:
            return cls(None, {(i, j): coeff})
        return cls({(i, j): coeff})

    @property
    def f_part(self) -> QFPoly:
        return dict(self._f)

    @property
    def g_part(self) -> QFPoly:
        return dict(self._g)

    def is_zero(self) -> bool:
        return not self._f and not self._g

    def terms(self) -> Iterable[Tuple[BiDegree, bool, Fraction]]:
        for k in sorted(self._f):
            yield k, False, self._f[k]
        for k in sorted(self._g):
            yield k, True, self._g[k]

    # arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["GElement"]:
        if isinstance(other, GElement):
            return other
        if isinstance(other, (int, Fraction)):
            return GElement.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GElement._raw(_poly_add(self._f, o._f), _poly_add(self._g, o._g))

    __radd__ = __add__

    def __neg__(self):
        return GElement._raw({k: -c for k, c in self._f.items()},
                             {k: -c for k, c in self._g.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GElement._raw(_poly_add(self._f, o._f, Fraction(-1)),
                             _poly_add(self._g, o._g, Fraction(-1)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return GElement()
            return GElement._raw({k: c * v for k, v in self._f.items()},
                                 {k: c * v for k, v in self._g.items()})
        if not isinstance(other, GElement):
            return NotImplemented
        return g_multiply(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not in the ring")
        result = GElement.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._key == o._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"GElement({format_gelement(self)})"

    # convenience wrappers
    def D(self) -> "GElement":
        return apply_D(self)

    def degrees(self) -> Tuple[Optional[BiDegree], Optional[BiDegree]]:
        return degrees(self)


Q = GElement.monomial(1, 0)
F = GElement.monomial(0, 1)
G = GElement.monomial(0, 0, with_g=True)
ONE = GElement.const(1)


def g_multiply(a: GElement, b: GElement) -> GElement:
    """Product ``(a1 + a2 g)(b1 + b2 g) = a1 b1 + a2 b2 (1 - f^2) + (a1 b2 + a2 b1) g``."""
    f_part = _poly_mul(a._f, b._f)
    gg = _poly_mul(a._g, b._g)
    if gg:
        f_part = _poly_add(f_part, _poly_one_minus_f2(gg))
    g_part = _poly_add(_poly_mul(a._f, b._g), _poly_mul(a._g, b._f))
    return GElement._raw(f_part, g_part)


def apply_D(a: GElement) -> GElement:
    """Apply ``D = q d/dq`` using ``Dq = q``, ``Df = q(1 - f^2)``, ``Dg = -q f g``."""
    f_out: QFPoly = {}
    g_out: QFPoly = {}

    def acc(target: QFPoly, k: BiDegree, c: Fraction) -> None:
        target[k] = target.get(k, 0) + c

    for (i, j), c in a._f.items():
        if i:
            acc(f_out, (i, j), i * c)
        if j:
            acc(f_out, (i + 1, j - 1), j * c)
            acc(f_out, (i + 1, j + 1), -j * c)
    for (i, j), c in a._g.items():
        # D(q^i f^j g) = (i q^i f^j + j q^{i+1} f^{j-1} - (j+1) q^{i+1} f^{j+1}) g
        if i:
            acc(g_out, (i, j), i * c)
        if j:
            acc(g_out, (i + 1, j - 1), j * c)
        acc(g_out, (i + 1, j + 1), -(j + 1) * c)
    return GElement(f_out, g_out)


def degrees(a: GElement) -> Tuple[Optional[BiDegree], Optional[BiDegree]]:
    """Return ``(deg_f, deg_g)``; the g-degree carries the extra ``(0, 1)`` of ``g``."""
    deg_f = poly_degree(a._f)
    deg_g = poly_degree(a._g)
    if deg_g is not None:
        deg_g = (deg_g[0], deg_g[1] + 1)
    return deg_f, deg_g


def leading_coefficient(a: GElement, side: str) -> Fraction:
    if side not in ("f", "g"):
        raise ValueError("side must be 'f' or 'g'")
    part = a._f if side == "f" else a._g
    if not part:
        raise ZeroPartError(f"the {side}-part is zero")
    return part[max(part)]


def add_degrees(d1: Optional[BiDegree], d2: Optional[BiDegree]) -> Optional[BiDegree]:
    if d1 is None or d2 is None:
        return None
    return (d1[0] + d2[0], d1[1] + d2[1])


# truncated series --------------------------------------------------------


class TruncatedSeries:
    """Power series in ``q`` with exact coefficients, modulo ``q**(order+1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: Optional[int] = None):
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        c = [Fraction(x) for x in coeffs[: order + 1]]
        c.extend([Fraction(0)] * (order + 1 - len(c)))
        self.order = order
        self.coeffs = c

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def _check(self, other: "TruncatedSeries") -> None:
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries([other], self.order)
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([a * other for a in self.coeffs], self.order)
        self._check(other)
        a, b, n = self.coeffs, other.coeffs, self.order
        nz_a = [(i, x) for i, x in enumerate(a) if x]
        out = [Fraction(0)] * (n + 1)
        for j, y in enumerate(b):
            if not y:
                continue
            for i, x in nz_a:
                if i + j > n:
                    break
                out[i + j] += x * y
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``q**k``."""
        return TruncatedSeries([Fraction(0)] * k + self.coeffs[: self.order + 1 - k], self.order)

    def derivative(self) -> "TruncatedSeries":
        """d/dq; the top coefficient is unknown after differentiation and is dropped."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        return TruncatedSeries([k * self.coeffs[k] for k in range(1, self.order + 1)],
                               self.order - 1)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncation")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries([other], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]})"


_TAYLOR_CACHE: Dict[int, Tuple[TruncatedSeries, TruncatedSeries]] = {}


def tanh_sech(order: int) -> Tuple[TruncatedSeries, TruncatedSeries]:
    """Truncated Taylor series of ``tanh`` and ``sech`` from zigzag numbers."""
    if order in _TAYLOR_CACHE:
        return _TAYLOR_CACHE[order]
    from ratsign.alternations import zigzag_numbers

    A = zigzag_numbers(order)
    f = [Fraction(0)] * (order + 1)
    g = [Fraction(0)] * (order + 1)
    for n in range(order + 1):
        sign = -1 if (n // 2) % 2 else 1
        term = Fraction(sign * A[n], factorial(n))
        if n % 2:
            f[n] = term
        else:
            g[n] = term
    res = (TruncatedSeries(f, order), TruncatedSeries(g, order))
    _TAYLOR_CACHE[order] = res
    return res


def _power_table(s: TruncatedSeries, top: int) -> List[TruncatedSeries]:
    out = [TruncatedSeries.one(s.order)]
    for _ in range(top):
        out.append(out[-1] * s)
    return out


def expand(a: GElement, order: int) -> TruncatedSeries:
    """Substitute the exact Taylor series of tanh and sech and truncate at ``q**order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    fs, gs = tanh_sech(order)
    top = max([j for (_, j) in list(a._f) + list(a._g)], default=0)
    fpow = _power_table(fs, top)

    def part(p: QFPoly) -> TruncatedSeries:
        acc = [Fraction(0)] * (order + 1)
        for (i, j), c in p.items():
            if i > order:
                continue
            src = fpow[j].coeffs
            for n in range(order + 1 - i):
                if src[n]:
                    acc[i + n] += c * src[n]
        return TruncatedSeries(acc, order)

    result = part(a._f)
    if a._g:
        result = result + part(a._g) * gs
    return result


# linear independence ---------------------------------------------------

_PRIMES = (2**61 - 1, 2**31 - 1, 1_000_000_007)


def _rank_mod_p(rows: List[List[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        prow = [x * inv % p for x in m[rank]]
        m[rank] = prow
        for r in range(len(m)):
            if r != rank and m[r][col]:
                k = m[r][col]
                m[r] = [(x - k * y) % p for x, y in zip(m[r], prow)]
        rank += 1
    return rank


def _rank_exact(rows: List[List[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for r in range(rank + 1, len(m)):
            if m[r][col]:
                k = m[r][col] / pv
                m[r] = [x - k * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def matrix_rank(rows: List[List[int]]) -> int:
    """Exact rank of an integer matrix.

    Ranks modulo a prime are lower bounds for the rational rank, so a
    modular computation hitting ``min(shape)`` settles it; otherwise an exact
    Fraction elimination decides.
    """
    if not rows or not rows[0]:
        return 0
    full = min(len(rows), len(rows[0]))
    for p in _PRIMES:
        if _rank_mod_p(rows, p) == full:
            return full
    return _rank_exact([[Fraction(x) for x in r] for r in rows])


def monomial_family(max_bidegree: BiDegree) -> List[GElement]:
    mi, mj = max_bidegree
    out = []
    for with_g in (False, True):
        for i in range(mi + 1):
            for j in range(mj + 1):
                out.append(GElement.monomial(i, j, with_g))
    return out


def _parity_counts(max_bidegree: BiDegree) -> Tuple[int, int]:
    mi, mj = max_bidegree
    even = sum(1 for i in range(mi + 1) for j in range(mj + 1) if (i + j) % 2 == 0)
    odd = (mi + 1) * (mj + 1) - even
    # each (i, j) appears once without and once with g
    return 2 * even, 2 * odd


def minimal_order(max_bidegree: BiDegree) -> int:
    """Smallest truncation order with enough even and odd rows for full column rank.

    ``q^i f^j`` and ``q^i f^j g`` have parity ``i + j``, so they only reach
    rows of that parity.
    """
    even, odd = _parity_counts(max_bidegree)
    n_even = 2 * (even - 1) if even else 0  # rows 0, 2, ..., n_even
    n_odd = 2 * odd - 1 if odd else 0  # rows 1, 3, ..., n_odd
    return max(n_even, n_odd)


def expansion_matrix(max_bidegree: BiDegree, order: int) -> List[List[int]]:
    """Rows ``m = 0..order`` of ``m! * [q^m]`` of every monomial, as integers."""
    cols = [expand(mono, order) for mono in monomial_family(max_bidegree)]
    rows = []
    for m in range(order + 1):
        fm = factorial(m)
        row = []
        for s in cols:
            v = s.coeffs[m] * fm
            if v.denominator != 1:
                raise ArithmeticError("expansion coefficient is not an integer after m! scaling")
            row.append(int(v))
        rows.append(row)
    return rows


def independence_rank(max_bidegree: BiDegree, order: int) -> bool:
    """Check that all ``q^i f^j`` and ``q^i f^j g`` with ``(i, j) <= max_bidegree``
    are linearly independent modulo ``q**(order+1)``.

    Raises :class:`InsufficientOrderError` when ``order`` leaves fewer rows of
    some parity than there are monomials of that parity.
    """
    need = minimal_order(max_bidegree)
    if order < need:
        raise InsufficientOrderError(
            f"order {order} cannot give full column rank for max bidegree "
            f"{tuple(max_bidegree)}; at least {need} is required")
    rows = expansion_matrix(max_bidegree, order)
    return matrix_rank(rows) == len(rows[0])


# serialization ---------------------------------------------------------


def format_rational(c: Fraction) -> str:
    return str(Fraction(c))


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def gelement_to_json(a: GElement) -> dict:
    return {
        "f": [[i, j, format_rational(c)] for (i, j), c in sorted(a._f.items())],
        "g": [[i, j, format_rational(c)] for (i, j), c in sorted(a._g.items())],
    }


def gelement_from_json(obj) -> GElement:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return GElement({(i, j): parse_rational(c) for i, j, c in obj.get("f", [])},
                    {(i, j): parse_rational(c) for i, j, c in obj.get("g", [])})


def format_gelement(a: GElement) -> str:
    if a.is_zero():
        return "0"
    pieces = []
    for (i, j), with_g, c in a.terms():
        factors = []
        if i:
            factors.append("q" if i == 1 else f"q^{i}")
        if j:
            factors.append("f" if j == 1 else f"f^{j}")
        if with_g:
            factors.append("g")
        mono = "*".join(factors)
        if not mono:
            pieces.append(format_rational(c))
        elif c == 1:
            pieces.append(mono)
        elif c == -1:
            pieces.append("-" + mono)
        else:
            pieces.append(f"{format_rational(c)}*{mono}")
    return " + ".join(pieces).replace("+ -", "- ")
