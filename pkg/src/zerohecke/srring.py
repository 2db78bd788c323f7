"""
The Stanley-Reisner ring of the Boolean algebra B_n.

Elements are finite linear combinations of multichain monomials ``y_M``.
Coefficients may be ints or :class:`~zerohecke.poly.Poly` values; anything
supporting ``+``, ``*`` and truthiness works.
"""

from __future__ import annotations

import itertools
import json
from collections import Counter
from typing import Iterable, Mapping

from .combinat import Composition, Multichain, Permutation, mask_of, popcount
from .poly import Poly
from .polyring import XPoly

__all__ = [
    "SRElement",
    "merge",
    "theta",
    "theta_power",
    "descent_monomial",
    "sym_action",
    "hecke_action",
    "hecke_on_monomial",
    "pi_action",
    "straighten",
    "expand",
    "rank_selection",
    "transfer",
    "monomials",
]


def merge(a: Multichain, b: Multichain) -> Multichain | None:
    """Product of two monomials: the merged multichain, or ``None`` if it is zero."""
    if a.n != b.n:
        raise ValueError(f"mismatched ambient sizes {a.n} and {b.n}")
    if not a.sets:
        return b
    if not b.sets:
        return a
    merged = sorted(a.sets + b.sets, key=lambda m: (popcount(m), m))
    for x, y in zip(merged, merged[1:]):
        if x & ~y:
            return None
    return Multichain(a.n, tuple(merged))


class SRElement:
    """An element of Z[B_n]: ``terms`` maps multichains to nonzero coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Multichain, object] | None = None):
        self.n = n
        self.terms: dict[Multichain, object] = {}
        for m, c in (terms or {}).items():
            if m.n != n:
                raise ValueError(f"monomial in B_{m.n} added to an element of B_{n}")
            if c:
                self.terms[m] = c

    @classmethod
    def monomial(cls, m: Multichain, coeff=1) -> "SRElement":
        return cls(m.n, {m: coeff})

    @classmethod
    def y(cls, n: int, *sets: Iterable[int]) -> "SRElement":
        """The monomial ``y_{A_1} ... y_{A_k}`` (zero if the sets are not a chain)."""
        out = cls.one(n)
        for s in sets:
            out = out * cls.monomial(Multichain(n, (mask_of(s),)))
        return out

    @classmethod
    def one(cls, n: int) -> "SRElement":
        return cls(n, {Multichain.empty(n): 1})

    @classmethod
    def zero(cls, n: int) -> "SRElement":
        return cls(n)

    def _check(self, other: "SRElement"):
        if not isinstance(other, SRElement):
            raise TypeError(f"expected SRElement, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(f"mismatched ambient sizes {self.n} and {other.n}")

    def _accumulate(self, out: dict, m: Multichain, c) -> None:
        if m in out:
            s = out[m] + c
            if s:
                out[m] = s
            else:
                del out[m]
        elif c:
            out[m] = c

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            self._accumulate(out, m, c)
        return SRElement._raw(self.n, out)

    def __neg__(self):
        return SRElement._raw(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SRElement):
            return self.scale(other)
        self._check(other)
        out: dict[Multichain, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = merge(m1, m2)
                if m is not None:
                    self._accumulate(out, m, c1 * c2)
        return SRElement._raw(self.n, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c) -> "SRElement":
        return SRElement(self.n, {m: c * v for m, v in self.terms.items()})

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "SRElement":
        e = cls.__new__(cls)
        e.n = n
        e.terms = terms
        return e

    def __eq__(self, other):
        if not isinstance(other, SRElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def multidegrees(self) -> set[tuple[int, ...]]:
        return {m.ranks() for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.multidegrees()) <= 1

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        return " + ".join(f"({c})*y[{m}]" for m, c in items)

    __repr__ = __str__

    def to_json(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())
        return json.dumps(
            {"n": self.n, "terms": [{"chain": m.as_lists(), "coeff": str(c)} for m, c in items]}
        )

    @classmethod
    def from_json(cls, text: str) -> "SRElement":
        data = json.loads(text)
        n = data["n"]
        out = cls(n)
        for t in data["terms"]:
            coeff = Poly.parse(t["coeff"])
            if coeff.variables():
                c = coeff
            else:
                c = coeff.constant_term()
            out = out + cls.monomial(Multichain.from_lists(t["chain"], n), c)
        return out


def monomials(n: int, max_length: int, *, include_empty_set: bool = True) -> list[Multichain]:
    """All multichains of length ``<= max_length`` in B_n (optionally without the empty set)."""
    from .combinat import multichains

    out = []
    for k in range(max_length + 1):
        for m in multichains(n, k):
            if include_empty_set or all(s for s in m.sets):
                out.append(m)
    return out


def theta(r: int, n: int) -> SRElement:
    """Rank polynomial: sum of ``y_A`` over ``|A| = r``."""
    if not 0 <= r <= n:
        raise ValueError(f"rank {r} out of range for n={n}")
    return SRElement(
        n, {Multichain(n, (mask_of(c),)): 1 for c in itertools.combinations(range(1, n + 1), r)}
    )


def theta_power(exps: Iterable[int], n: int) -> SRElement:
    """``theta_0^{a_0} ... theta_n^{a_n}`` for ``exps = (a_0, ..., a_n)``."""
    out = SRElement.one(n)
    for r, a in enumerate(exps):
        for _ in range(a):
            out = out * theta(r, n)
    return out


def descent_monomial(w: Permutation) -> Multichain:
    """Chain of the initial segments ``{w(1..i)}`` over the descents ``i`` of ``w``."""
    return Multichain(w.n, tuple(w.initial_set(i) for i in sorted(w.descent_set())))


def _check_gen(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")


def sym_action(i: int, f: SRElement) -> SRElement:
    _check_gen(i, f.n)
    return SRElement._raw(f.n, {m.apply_simple(i): c for m, c in f.terms.items()})


def _first_entry(m: Multichain, bit: int) -> int:
    for j, s in enumerate(m.sets, 1):
        if s & bit:
            return j
    return len(m.sets) + 1


def hecke_on_monomial(i: int, m: Multichain) -> tuple[int, Multichain] | None:
    """Image of ``y_M`` under the i-th generator as ``(sign, monomial)``, or ``None`` for zero."""
    pi = _first_entry(m, 1 << (i - 1))
    pj = _first_entry(m, 1 << i)
    if pi > pj:
        return -1, m
    if pi == pj:
        return None
    return 1, m.apply_simple(i)


def hecke_action(i: int, f: SRElement) -> SRElement:
    _check_gen(i, f.n)
    out: dict[Multichain, object] = {}
    for m, c in f.terms.items():
        img = hecke_on_monomial(i, m)
        if img is None:
            continue
        sign, m2 = img
        f._accumulate(out, m2, c if sign > 0 else -c)
    return SRElement._raw(f.n, out)


def pi_action(i: int, f: SRElement) -> SRElement:
    """The other generator, ``pibar_i + 1``."""
    return hecke_action(i, f) + f


def _theta_times_descent(exps: Counter, w: Permutation) -> SRElement:
    out = SRElement.monomial(descent_monomial(w))
    for r in sorted(exps):
        t = theta(r, w.n)
        for _ in range(exps[r]):
            out = out * t
    return out


def straighten(f: SRElement) -> dict[Permutation, dict[tuple[int, ...], object]]:
    """Write ``f = sum_w c_w(Theta) Y_w``.

    Returns ``{w: {(a_0, ..., a_n): coeff}}``.  The smallest monomial (by rank
    multiset, then by chain bitmasks) is always the leading term of
    ``theta^a Y_sigma(M)``, and every other term of that product is larger, so
    peeling the minimum terminates.
    """
    n = f.n
    rem = dict(f.terms)
    out: dict[Permutation, dict[tuple[int, ...], object]] = {}
    while rem:
        m = min(rem, key=lambda x: x.sort_key())
        c = rem[m]
        sigma = m.sigma()
        extra = Counter(m.ranks())
        extra.subtract(sorted(sigma.descent_set()))
        if any(v < 0 for v in extra.values()):
            raise AssertionError("descent set of sigma(M) is not inside the rank multiset")
        exps = tuple(extra.get(r, 0) for r in range(n + 1))
        bucket = out.setdefault(sigma, {})
        bucket[exps] = bucket.get(exps, 0) + c
        if not bucket[exps]:
            del bucket[exps]
        product = _theta_times_descent(extra, sigma)
        if product.terms.get(m) != 1:
            raise AssertionError("leading term of theta^a Y_w is not the peeled monomial")
        for m2, c2 in product.terms.items():
            if m2 != m and m2.sort_key() < m.sort_key():
                raise AssertionError("straightening order violated")
            f._accumulate(rem, m2, -(c * c2))
    return {w: b for w, b in out.items() if b}


def expand(decomposition: Mapping[Permutation, Mapping[tuple[int, ...], object]], n: int) -> SRElement:
    out = SRElement.zero(n)
    for w, bucket in decomposition.items():
        for exps, c in bucket.items():
            counter = Counter({r: a for r, a in enumerate(exps) if a})
            out = out + _theta_times_descent(counter, w).scale(c)
    return out


def rank_selection(f: SRElement, alpha: Composition) -> SRElement:
    """Kill every monomial that uses a set whose size is outside D(alpha) and ``{n}``."""
    if alpha.n != f.n:
        raise ValueError(f"composition of {alpha.n} used on B_{f.n}")
    keep = alpha.descent_set() | {f.n}
    return SRElement._raw(
        f.n, {m: c for m, c in f.terms.items() if all(r in keep for r in m.ranks())}
    )


def transfer(f: SRElement) -> XPoly:
    """``y_M -> prod_i prod_{j in A_i} x_j`` extended linearly (integer coefficients)."""
    out: dict[tuple[int, ...], int] = {}
    for m, c in f.terms.items():
        e = [0] * f.n
        for s in m.sets:
            for j in range(f.n):
                if s >> j & 1:
                    e[j] += 1
        key = tuple(e)
        out[key] = out.get(key, 0) + c
    return XPoly(f.n, out)
