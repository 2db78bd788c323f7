"""
Sparse multivariate polynomials over the integers in named parameters, and
truncated power series built on top of them.

A monomial is a tuple of ``(name, exponent)`` pairs sorted by a natural
ordering of names (``t2`` before ``t10``).  Coefficients are Python ints, so
arithmetic is exact at any size.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Union

__all__ = ["Poly", "Caps", "Series", "var_key", "geometric", "inverse", "pochhammer", "q_integer"]

Monomial = tuple  # tuple[tuple[str, int], ...]


@lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    m = re.fullmatch(r"([A-Za-z_]*)(\d*)(.*)", name)
    head, digits, tail = m.groups()
    return (head, len(digits) == 0, int(digits) if digits else 0, len(digits), tail, name)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items(), key=lambda kv: var_key(kv[0])))


def _mono_from(mapping: Mapping[str, int]) -> Monomial:
    return tuple(sorted(((v, e) for v, e in mapping.items() if e), key=lambda kv: var_key(kv[0])))


class Poly:
    """Polynomial with integer coefficients in named variables."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    # constructors
    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(): int(c)})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): 1})

    @classmethod
    def monomial(cls, exps: Mapping[str, int], coeff: int = 1) -> "Poly":
        if any(e < 0 for e in exps.values()):
            raise ValueError("negative exponent")
        return cls({_mono_from(exps): coeff})

    @classmethod
    def coerce(cls, x: "Poly | int") -> "Poly":
        if isinstance(x, Poly):
            return x
        if isinstance(x, int):
            return cls.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Poly")

    # arithmetic
    def __add__(self, other):
        other = Poly.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Poly.coerce(other))

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        other = Poly.coerce(other)
        if len(other.terms) == 1 and () in other.terms:
            k = other.terms[()]
            return Poly._raw({m: c * k for m, c in self.terms.items()}) if k else Poly()
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    # comparison
    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # inspection
    def variables(self) -> set[str]:
        return {v for m in self.terms for v, _ in m}

    def degree(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self.terms), default=0)

    def total_degree(self, names: Iterable[str] | None = None) -> int:
        names = None if names is None else set(names)
        return max(
            (sum(e for v, e in m if names is None or v in names) for m in self.terms),
            default=0,
        )

    def coeff(self, exps: Mapping[str, int]) -> int:
        return self.terms.get(_mono_from(exps), 0)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def items(self):
        return self.terms.items()

    # transformations
    def subs(self, mapping: Mapping[str, "Poly | int"]) -> "Poly":
        """Substitute polynomials for variables (simultaneously)."""
        mapping = {k: Poly.coerce(v) for k, v in mapping.items()}
        out = Poly()
        cache: dict[tuple[str, int], Poly] = {}
        for m, c in self.terms.items():
            term = Poly.const(c)
            rest = []
            for v, e in m:
                if v in mapping:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = mapping[v] ** e
                    term = term * cache[key]
                else:
                    rest.append((v, e))
            if rest:
                term = term * Poly({tuple(rest): 1})
            out = out + term
        return out

    def truncate(self, caps: "Caps") -> "Poly":
        return Poly._raw({m: c for m, c in self.terms.items() if caps.admits(m)})

    def evaluate(self, values: Mapping[str, int]) -> int:
        total = 0
        for m, c in self.terms.items():
            t = c
            for v, e in m:
                t *= values[v] ** e
            total += t
        return total

    def monomial_gcd(self) -> Monomial:
        """Largest monomial dividing every term."""
        it = iter(self.terms)
        first = next(it, None)
        if first is None:
            return ()
        common = dict(first)
        for m in it:
            d = dict(m)
            common = {v: min(e, d.get(v, 0)) for v, e in common.items()}
            common = {v: e for v, e in common.items() if e}
            if not common:
                break
        return _mono_from(common)

    def divide_monomial(self, mono: Monomial) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            for v, e in mono:
                d[v] = d.get(v, 0) - e
                if d[v] < 0:
                    raise ValueError("monomial does not divide polynomial")
            out[_mono_from(d)] = c
        return Poly._raw(out)

    # text
    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        def key(item):
            m, _ = item
            return (sum(e for _, e in m), [(var_key(v), e) for v, e in m])

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            body = format_monomial(m)
            if not body:
                s = str(abs(c))
            elif abs(c) == 1:
                s = body
            else:
                s = f"{abs(c)}*{body}"
            pieces.append(("-" if c < 0 else "+", s))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, s in pieces[1:]:
            out += f" {sign} {s}"
        return out

    def __repr__(self) -> str:
        return f"Poly({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Inverse of ``str``: e.g. ``"3*q^2*t1 - t2 + 1"``."""
        src = text.replace(" ", "")
        if not src:
            raise ValueError("empty polynomial string")
        if src[0] not in "+-":
            src = "+" + src
        out = Poly()
        for sign, body in re.findall(r"([+-])([^+-]+)", src):
            coeff = 1
            exps: dict[str, int] = {}
            for factor in body.split("*"):
                if re.fullmatch(r"\d+", factor):
                    coeff *= int(factor)
                    continue
                m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)(?:\^(\d+))?", factor)
                if not m:
                    raise ValueError(f"malformed factor {factor!r} in {text!r}")
                name, e = m.group(1), int(m.group(2) or 1)
                exps[name] = exps.get(name, 0) + e
            out = out + Poly.monomial(exps, -coeff if sign == "-" else coeff)
        if "".join(sign + body for sign, body in re.findall(r"([+-])([^+-]+)", src)) != src:
            raise ValueError(f"malformed polynomial {text!r}")
        return out


def format_monomial(m: Monomial) -> str:
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in m)


@dataclass(frozen=True)
class Caps:
    """Degree caps: per-variable bounds and an optional total bound.

    ``total`` bounds the summed degree over ``total_vars`` (all variables when
    ``total_vars`` is ``None``).
    """

    per_var: tuple[tuple[str, int], ...] = ()
    total: int | None = None
    total_vars: frozenset[str] | None = None

    @classmethod
    def make(cls, per_var: Mapping[str, int] | None = None, total: int | None = None,
             total_vars: Iterable[str] | None = None) -> "Caps":
        pv = tuple(sorted((per_var or {}).items(), key=lambda kv: var_key(kv[0])))
        if any(c < 0 for _, c in pv) or (total is not None and total < 0):
            raise ValueError("caps must be nonnegative")
        tv = None if total_vars is None else frozenset(total_vars)
        return cls(pv, total, tv)

    def admits(self, m: Monomial) -> bool:
        if self.per_var:
            d = dict(m)
            for v, cap in self.per_var:
                if d.get(v, 0) > cap:
                    return False
        if self.total is not None:
            tv = self.total_vars
            deg = sum(e for v, e in m if tv is None or v in tv)
            if deg > self.total:
                return False
        return True

    def bounded(self, m: Monomial) -> bool:
        """True if some capped quantity grows with powers of ``m``."""
        if not m:
            return False
        names = {v for v, _ in m}
        if any(v in names for v, _ in self.per_var):
            return True
        if self.total is not None:
            return self.total_vars is None or bool(names & self.total_vars)
        return False


@dataclass(frozen=True)
class Series:
    """A power series known exactly up to ``caps``."""

    poly: Poly
    caps: Caps = field(default_factory=Caps)

    def __post_init__(self):
        object.__setattr__(self, "poly", Poly.coerce(self.poly).truncate(self.caps))

    def _lift(self, other) -> "Series":
        if isinstance(other, Series):
            if other.caps != self.caps:
                raise ValueError("cannot combine series with different caps")
            return other
        return Series(Poly.coerce(other), self.caps)

    def __add__(self, other):
        return Series(self.poly + self._lift(other).poly, self.caps)

    __radd__ = __add__

    def __sub__(self, other):
        return Series(self.poly - self._lift(other).poly, self.caps)

    def __neg__(self):
        return Series(-self.poly, self.caps)

    def __mul__(self, other):
        return Series(truncated_product(self.poly, self._lift(other).poly, self.caps), self.caps)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.caps == other.caps and self.poly == other.poly

    def __hash__(self):
        return hash((self.poly, self.caps))

    def __str__(self):
        return f"{self.poly} + O({self.caps})"


def truncated_product(a: Poly, b: Poly, caps: Caps) -> Poly:
    out: dict = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            m = _mono_mul(m1, m2)
            if not caps.admits(m):
                continue
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return Poly._raw(out)


def inverse(p: Poly, caps: Caps, max_terms: int = 10_000) -> Series:
    """``1/p`` for ``p`` with constant term 1, expanded geometrically under ``caps``."""
    if p.constant_term() != 1:
        raise ValueError("series inverse needs constant term 1")
    g = Poly.const(1) - p  # 1/p = sum g^j
    for m in g.terms:
        if not caps.bounded(m):
            raise ValueError(f"caps do not bound powers of {format_monomial(m)}")
    total = Poly.const(1).truncate(caps)
    power = total
    for _ in range(max_terms):
        power = truncated_product(power, g, caps)
        if power.is_zero():
            return Series(total, caps)
        total = total + power
    raise RuntimeError("geometric expansion did not terminate under the given caps")


def geometric(v: Poly | str, caps: Caps) -> Series:
    """``1/(1 - v)``."""
    if isinstance(v, str):
        v = Poly.var(v)
    return inverse(Poly.const(1) - v, caps)


def pochhammer(u: Poly | str, q: Poly | str, n: int) -> Poly:
    """``(u; q)_n = prod_{0 <= i <= n} (1 - q^i u)`` (``n + 1`` factors)."""
    u = Poly.var(u) if isinstance(u, str) else u
    q = Poly.var(q) if isinstance(q, str) else q
    out = Poly.const(1)
    for i in range(n + 1):
        out = out * (Poly.const(1) - (q ** i) * u)
    return out


def q_integer(k: int, q: Poly | str = "q") -> Poly:
    """``[k]_q = 1 + q + ... + q^{k-1}``."""
    q = Poly.var(q) if isinstance(q, str) else q
    return sum((q ** i for i in range(k)), Poly())


PolyLike = Union[Poly, int]
