"""
The polynomial ring Z[x_1, ..., x_n] with the Demazure (isobaric divided
difference) 0-Hecke action and its leading-term truncation, the transferred
action.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .combinat import Permutation

__all__ = [
    "XPoly",
    "sym_action",
    "demazure",
    "demazure_fraction",
    "transferred_demazure",
    "divide_by_difference",
    "elementary",
    "descent_monomial",
]


class XPoly:
    """Polynomial in ``x_1..x_n`` keyed by exponent vectors of length ``n``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], int] | None = None):
        self.n = n
        self.terms = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent vector {e} has wrong length for n={n}")
            if c:
                self.terms[e] = self.terms.get(e, 0) + c
        self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> "XPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: coeff})

    @classmethod
    def var(cls, i: int, n: int) -> "XPoly":
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def one(cls, n: int) -> "XPoly":
        return cls(n, {(0,) * n: 1})

    def _check(self, other: "XPoly"):
        if not isinstance(other, XPoly) or other.n != self.n:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return XPoly(self.n, out)

    def __neg__(self):
        return XPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return XPoly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return XPoly(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            body = "*".join(
                f"x{i}" if a == 1 else f"x{i}^{a}" for i, a in enumerate(e, 1) if a
            )
            mag = abs(c)
            if not body:
                s = str(mag)
            elif mag == 1:
                s = body
            else:
                s = f"{mag}*{body}"
            parts.append(("-" if c < 0 else "+", s))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, s in parts[1:]:
            out += f" {sign} {s}"
        return out

    __repr__ = __str__


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")


def sym_action(i: int, f: XPoly) -> XPoly:
    _check_index(i, f.n)
    out = {}
    for e, c in f.terms.items():
        e = list(e)
        e[i - 1], e[i] = e[i], e[i - 1]
        out[tuple(e)] = c
    return XPoly(f.n, out)


def _with(e: tuple[int, ...], i: int, a: int, b: int) -> tuple[int, ...]:
    e = list(e)
    e[i - 1], e[i] = a, b
    return tuple(e)


def demazure(i: int, f: XPoly) -> XPoly:
    """Isobaric divided difference, applied monomial by monomial."""
    _check_index(i, f.n)
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        a, b = e[i - 1], e[i]
        if a > b:
            # x_i^{a-1} x_{i+1}^{b+1} + ... + x_i^b x_{i+1}^a
            for j in range(1, a - b + 1):
                key = _with(e, i, a - j, b + j)
                out[key] = out.get(key, 0) + c
        elif a < b:
            # -(x_i^a x_{i+1}^b + ... + x_i^{b-1} x_{i+1}^{a+1})
            for j in range(0, b - a):
                key = _with(e, i, a + j, b - j)
                out[key] = out.get(key, 0) - c
    return XPoly(f.n, out)


def transferred_demazure(i: int, f: XPoly) -> XPoly:
    """Demazure image cut down to one term per monomial.

    For ``a > b`` the surviving term is ``x_i^b x_{i+1}^a m`` (the extreme term,
    leading when ``x_{i+1}`` is ordered above ``x_i``); this is exactly the
    transfer of the action on the Stanley-Reisner ring.
    """
    _check_index(i, f.n)
    out: dict[tuple[int, ...], int] = {}
    for e, c in f.terms.items():
        a, b = e[i - 1], e[i]
        if a > b:
            key = _with(e, i, b, a)
            out[key] = out.get(key, 0) + c
        elif a < b:
            out[e] = out.get(e, 0) - c
    return XPoly(f.n, out)


def divide_by_difference(g: XPoly, i: int) -> XPoly:
    """Exact quotient ``g / (x_i - x_{i+1})``; raises if the division is not exact."""
    _check_index(i, g.n)
    rem = dict(g.terms)
    quot: dict[tuple[int, ...], int] = {}
    while rem:
        # the term of highest x_i-degree is cancelled by x_i * (leading quotient term)
        e = max(rem, key=lambda k: (k[i - 1], k))
        c = rem[e]
        a, b = e[i - 1], e[i]
        if a == 0:
            raise ArithmeticError("polynomial is not divisible by x_i - x_{i+1}")
        qkey = _with(e, i, a - 1, b)
        quot[qkey] = quot.get(qkey, 0) + c
        rem[e] -= c
        nxt = _with(e, i, a - 1, b + 1)
        rem[nxt] = rem.get(nxt, 0) + c
        rem = {k: v for k, v in rem.items() if v}
    return XPoly(g.n, quot)


def demazure_fraction(i: int, f: XPoly) -> XPoly:
    """``(x_{i+1} f - x_{i+1} s_i f) / (x_i - x_{i+1})`` by exact division."""
    xi1 = XPoly.var(i + 1, f.n)
    return divide_by_difference(xi1 * f - xi1 * sym_action(i, f), i)


def elementary(k: int, n: int) -> XPoly:
    from itertools import combinations

    out = {}
    for sub in combinations(range(n), k):
        e = [0] * n
        for j in sub:
            e[j] = 1
        out[tuple(e)] = 1
    return XPoly(n, out)


def descent_monomial(w: Permutation) -> XPoly:
    """X_w = prod over descents i of x_{w(1)} ... x_{w(i)}."""
    e = [0] * w.n
    for i in w.descent_set():
        for v in w.images[:i]:
            e[v - 1] += 1
    return XPoly(w.n, {tuple(e): 1})
