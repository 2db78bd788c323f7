"""
Quasisymmetric (M, F bases) and noncommutative symmetric (h, s bases)
functions with polynomial coefficients, the multivariate noncommutative
Hall-Littlewood family, parameter substitutions and principal specializations.

Quasisymmetric functions use the reversed-subscript convention, so
``ps_{q;inf}(F_alpha) = q^{maj(alpha)} / ((1-q)...(1-q^n))``.
"""

from __future__ import annotations

import itertools
import json
import re
from typing import Iterable, Mapping

from .combinat import Composition, compositions
from .poly import Caps, Poly, Series, format_monomial, inverse, pochhammer, var_key

__all__ = [
    "QSymElt",
    "NSymElt",
    "F",
    "M",
    "s",
    "h",
    "f_to_m",
    "m_to_f",
    "s_to_h",
    "h_to_s",
    "ribbon_product",
    "pairing",
    "bz_inner",
    "hall_littlewood",
    "specialize",
    "check_parameter_name",
    "bz_substitution",
    "qt_substitution",
    "lnt_substitution",
    "periodic_substitution",
    "hl_product_formula_check",
    "periodic_corollary_check",
    "hl_transition_is_unitriangular",
    "principal_specialization",
    "ps_generating_function",
    "ps_generating_function_closed",
]

_PARAM = re.compile(r"q|u|z|t|u1|u2|q0|q1|q2|t\d+|y[01]+")


def check_parameter_name(name: str) -> None:
    if not _PARAM.fullmatch(name):
        raise ValueError(f"unknown parameter {name!r}")


def _comp_order(c: Composition) -> tuple:
    # smaller sizes first, then descending lexicographic: s4, s31, s22, s211, s13, ...
    return (c.n, tuple(-p for p in c.parts))


class _BasisElt:
    """Finite sum ``sum_alpha c_alpha * B_alpha`` with :class:`Poly` coefficients."""

    BASES: tuple[str, ...] = ()
    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[Composition, Poly | int] | None = None):
        if basis not in self.BASES:
            raise ValueError(f"unknown basis {basis!r} for {type(self).__name__}")
        self.basis = basis
        self.terms: dict[Composition, Poly] = {}
        for a, c in (terms or {}).items():
            c = Poly.coerce(c)
            if c:
                self.terms[a] = self.terms.get(a, Poly()) + c
        self.terms = {a: c for a, c in self.terms.items() if c}

    @classmethod
    def basis_element(cls, basis: str, alpha, coeff: Poly | int = 1):
        if not isinstance(alpha, Composition):
            alpha = Composition(tuple(alpha))
        return cls(basis, {alpha: coeff})

    def _same(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.basis != self.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, Poly()) + c
        return type(self)(self.basis, out)

    def __neg__(self):
        return type(self)(self.basis, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Poly | int):
        c = Poly.coerce(c)
        return type(self)(self.basis, {a: c * v for a, v in self.terms.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, alpha) -> Poly:
        if not isinstance(alpha, Composition):
            alpha = Composition(tuple(alpha))
        return self.terms.get(alpha, Poly())

    def map_coefficients(self, fn):
        return type(self)(self.basis, {a: fn(c) for a, c in self.terms.items()})

    def items(self) -> list[tuple[Composition, Poly]]:
        return sorted(self.terms.items(), key=lambda kv: _comp_order(kv[0]))

    def _label(self, a: Composition) -> str:
        return f"{self.basis}[{','.join(map(str, a.parts))}]"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, factor: bool = True) -> str:
        """Canonical text, e.g. ``t1*(F[2] + q*F[1,1])``."""
        if not self.terms:
            return "0"
        items = self.items()
        common: tuple = ()
        if factor and len(items) > 1:
            common = _common_monomial([c for _, c in items])
        pieces = []
        for a, c in items:
            if common:
                c = c.divide_monomial(common)
            pieces.append(_signed_term(c, self._label(a)))
        body = pieces[0][1] if pieces[0][0] == "+" else "-" + pieces[0][1]
        for sign, txt in pieces[1:]:
            body += f" {sign} {txt}"
        if common:
            return f"{format_monomial(common)}*({body})"
        return body

    __repr__ = __str__

    def to_json(self) -> str:
        return json.dumps(
            {
                "basis": self.basis,
                "terms": [{"composition": list(a.parts), "coeff": str(c)} for a, c in self.items()],
            }
        )

    @classmethod
    def from_json(cls, text: str):
        data = json.loads(text)
        return cls(
            data["basis"],
            {Composition(tuple(t["composition"])): Poly.parse(t["coeff"]) for t in data["terms"]},
        )


def _common_monomial(coeffs: list[Poly]) -> tuple:
    common: dict[str, int] | None = None
    for c in coeffs:
        g = dict(c.monomial_gcd())
        if common is None:
            common = g
        else:
            common = {v: min(e, g[v]) for v, e in common.items() if v in g}
        if not common:
            return ()
    return tuple(sorted((common or {}).items(), key=lambda kv: var_key(kv[0])))


def _signed_term(c: Poly, label: str) -> tuple[str, str]:
    if len(c.terms) == 1:
        (m, v), = c.terms.items()
        sign = "-" if v < 0 else "+"
        mag = abs(v)
        body = format_monomial(m)
        parts = ([str(mag)] if mag != 1 else []) + ([body] if body else []) + [label]
        return sign, "*".join(parts)
    return "+", f"({c})*{label}"


class QSymElt(_BasisElt):
    BASES = ("M", "F")


class NSymElt(_BasisElt):
    BASES = ("h", "s")

    def __mul__(self, other):
        if isinstance(other, (int, Poly)):
            return self.scale(other)
        self._same(other)
        out = NSymElt(self.basis)
        for a, c in self.terms.items():
            for b, d in other.terms.items():
                if self.basis == "h":
                    prod = NSymElt("h", {a.concat(b): 1})
                else:
                    prod = ribbon_product(a, b)
                out = out + prod.scale(c * d)
        return out

    def __rmul__(self, other):
        return self.scale(other)


def F(*parts: int, coeff=1) -> QSymElt:
    return QSymElt.basis_element("F", parts, coeff)


def M(*parts: int, coeff=1) -> QSymElt:
    return QSymElt.basis_element("M", parts, coeff)


def s(*parts: int, coeff=1) -> NSymElt:
    return NSymElt.basis_element("s", parts, coeff)


def h(*parts: int, coeff=1) -> NSymElt:
    return NSymElt.basis_element("h", parts, coeff)


# -- basis changes -------------------------------------------------------------


def _finer(alpha: Composition) -> Iterable[Composition]:
    """All beta with D(beta) containing D(alpha)."""
    ds = alpha.descent_set()
    rest = sorted(set(range(1, alpha.n)) - ds)
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            yield Composition.from_descent_set(ds | set(extra), alpha.n)


def f_to_m(x: QSymElt) -> QSymElt:
    if x.basis == "M":
        return x
    out: dict[Composition, Poly] = {}
    for a, c in x.terms.items():
        for b in _finer(a):
            out[b] = out.get(b, Poly()) + c
    return QSymElt("M", out)


def m_to_f(x: QSymElt) -> QSymElt:
    if x.basis == "F":
        return x
    out: dict[Composition, Poly] = {}
    for a, c in x.terms.items():
        for b in _finer(a):
            sign = (-1) ** (len(b.descent_set()) - len(a.descent_set()))
            out[b] = out.get(b, Poly()) + c * sign
    return QSymElt("F", out)


def h_to_s(x: NSymElt) -> NSymElt:
    if x.basis == "s":
        return x
    out: dict[Composition, Poly] = {}
    for a, c in x.terms.items():
        for b in a.coarsenings():
            out[b] = out.get(b, Poly()) + c
    return NSymElt("s", out)


def s_to_h(x: NSymElt) -> NSymElt:
    if x.basis == "h":
        return x
    out: dict[Composition, Poly] = {}
    for a, c in x.terms.items():
        for b in a.coarsenings():
            out[b] = out.get(b, Poly()) + c * (-1) ** (len(a) - len(b))
    return NSymElt("h", out)


def ribbon_product(alpha: Composition, beta: Composition) -> NSymElt:
    """``s_alpha * s_beta = s_{alpha beta} + s_{alpha |> beta}``."""
    if not alpha.parts:
        return NSymElt("s", {beta: 1})
    if not beta.parts:
        return NSymElt("s", {alpha: 1})
    return NSymElt("s", {alpha.concat(beta): 1}) + NSymElt("s", {alpha.near_concat(beta): 1})


def pairing(x: QSymElt, y: NSymElt) -> Poly:
    """Duality pairing with ``<F_a, s_b> = <M_a, h_b> = delta``."""
    xf, ys = m_to_f(x), h_to_s(y)
    out = Poly()
    for a, c in xf.terms.items():
        if a in ys.terms:
            out = out + c * ys.terms[a]
    return out


def bz_inner(x: NSymElt, y: NSymElt) -> Poly:
    """Bilinear form with ``<s_a, s_b> = (-1)^{|a| + l(a)} delta_{a, b^c}``."""
    xs, ys = h_to_s(x), h_to_s(y)
    out = Poly()
    for a, c in xs.terms.items():
        partner = a.complement() if a.parts else a
        if partner in ys.terms:
            out = out + c * ys.terms[partner] * (-1) ** (a.n + len(a))
    return out


# -- Hall-Littlewood family ------------------------------------------------------


def _t_product(indices: Iterable[int], prefix: str = "t") -> Poly:
    out = Poly.const(1)
    for i in sorted(indices):
        out = out * Poly.var(f"{prefix}{i}")
    return out


def hall_littlewood(alpha: Composition, modified: bool = True) -> NSymElt:
    """``H~_alpha = sum_{beta <= alpha} t^{D(beta)} s_beta``; unmodified uses ``t^{D(alpha) - D(beta)}``."""
    da = alpha.descent_set()
    out = {}
    for b in alpha.coarsenings():
        db = b.descent_set()
        out[b] = _t_product(db if modified else da - db)
    return NSymElt("s", out)


def specialize(x, subst: Mapping[str, Poly | int]):
    """Substitute parameters in the coefficients of ``x`` (an element or a Poly)."""
    for name in subst:
        check_parameter_name(name)
    mapping = {k: Poly.coerce(v) for k, v in subst.items()}
    if isinstance(x, Poly):
        return x.subs(mapping)
    if isinstance(x, int):
        return Poly.const(x)
    if isinstance(x, Series):
        return Series(x.poly.subs(mapping), x.caps)
    return x.map_coefficients(lambda c: c.subs(mapping))


def bz_substitution(n: int, var: str = "t") -> dict[str, Poly]:
    """``t_i -> t^i``."""
    t = Poly.var(var)
    return {f"t{i}": t ** i for i in range(1, n)}


def qt_substitution(alpha: Composition) -> dict[str, Poly]:
    """``t_i -> t^i`` for ``i`` in D(alpha), ``t_i -> q^{n-i}`` otherwise."""
    n = alpha.n
    ds = alpha.descent_set()
    t, q = Poly.var("t"), Poly.var("q")
    return {f"t{i}": (t ** i if i in ds else q ** (n - i)) for i in range(1, n)}


def lnt_substitution(alpha: Composition) -> dict[str, Poly]:
    """``t_i -> y_{u_1...u_i}`` with ``u(alpha)`` the descent indicator word."""
    u = alpha.binary_word()
    return {f"t{i}": Poly.var(f"y{u[:i]}") for i in range(1, alpha.n)}


def periodic_substitution(n: int, upto: int) -> dict[str, Poly]:
    """``t|n``: ``t_{jn} -> 1`` and ``t_{jn+i} -> t_i`` for indices up to ``upto``."""
    out = {}
    for j in range(n, upto + 1):
        r = j % n
        out[f"t{j}"] = Poly.const(1) if r == 0 else Poly.var(f"t{r}")
    return out


def product_formula_rhs(alpha: Composition, beta: Composition) -> NSymElt:
    a = alpha.n
    db = beta.descent_set()
    out = NSymElt("s")
    for g in beta.coarsenings():
        factor = Poly.const(1)
        for i in sorted(db - g.descent_set()):
            factor = factor * (Poly.var(f"t{i}") - Poly.var(f"t{a + i}"))
        term = hall_littlewood(alpha.concat(g), modified=False)
        term = term + hall_littlewood(alpha.near_concat(g), modified=False).scale(
            Poly.const(1) - Poly.var(f"t{a}")
        )
        out = out + term.scale(factor)
    return out


def hl_product_formula_check(alpha: Composition, beta: Composition) -> bool:
    lhs = hall_littlewood(alpha, False) * hall_littlewood(beta, False)
    return lhs == product_formula_rhs(alpha, beta)


def periodic_corollary_check(alpha: Composition, beta: Composition) -> bool:
    """``H_alpha(t) * H_beta(t|n) = H_{alpha beta}(t|n)`` with ``n = |alpha|``."""
    n = alpha.n
    top = n + beta.n
    per = periodic_substitution(n, top)
    hb = specialize(hall_littlewood(beta, False), per)
    lhs = hall_littlewood(alpha, False) * hb
    rhs = specialize(hall_littlewood(alpha.concat(beta), False), per)
    return lhs == rhs


def hl_transition_is_unitriangular(n: int) -> bool:
    """Each ``H_alpha`` has ``s_alpha`` with coefficient 1 and otherwise only ``s_beta``, ``beta < alpha``."""
    for a in compositions(n):
        x = hall_littlewood(a, False)
        if x.coeff(a) != 1:
            return False
        if any(not (b.refines(a) and b != a) for b in x.terms if b != a):
            return False
    return True


# -- principal specialization -----------------------------------------------------


def _ps_fundamental_finite(alpha: Composition, ell: int, q: str) -> Poly:
    n = alpha.n
    ds = alpha.descent_set()
    qv = Poly.var(q)
    out = Poly()
    # weakly decreasing i_1 >= ... >= i_n >= 1 bounded by ell
    for seq in itertools.combinations_with_replacement(range(ell, 0, -1), n):
        if all(seq[j - 1] > seq[j] for j in ds):
            out = out + qv ** sum(i - 1 for i in seq)
    return out


def principal_specialization(x: QSymElt, ell: int | float, caps: Caps | None = None, q: str = "q"):
    """``ps_{q;ell}(x)``: a Poly for finite ``ell``, a truncated Series for ``ell = inf``."""
    xf = m_to_f(x)
    if ell == float("inf"):
        if caps is None:
            raise ValueError("the infinite principal specialization needs degree caps")
        out = Series(Poly(), caps)
        for a, c in xf.terms.items():
            denom = Poly.const(1)
            for i in range(1, a.n + 1):
                denom = denom * (1 - Poly.var(q) ** i)
            out = out + inverse(denom, caps) * (c * Poly.var(q) ** a.maj())
        return out
    if ell < 0 or int(ell) != ell:
        raise ValueError(f"ell must be a nonnegative integer or inf, got {ell}")
    out = Poly()
    for a, c in xf.terms.items():
        out = out + c * _ps_fundamental_finite(a, int(ell), q)
    return out


def ps_generating_function(alpha: Composition, caps: Caps, u: str = "u", q: str = "q") -> Series:
    """``sum_l u^l ps_{q;l+1}(F_alpha)`` by enumeration, for ``l`` up to the cap on ``u``."""
    ucap = dict(caps.per_var).get(u)
    if ucap is None:
        raise ValueError(f"caps must bound {u!r}")
    out = Poly()
    for ell in range(ucap + 1):
        out = out + Poly.var(u) ** ell * _ps_fundamental_finite(alpha, ell + 1, q)
    return Series(out, caps)


def ps_generating_function_closed(alpha: Composition, caps: Caps, u: str = "u", q: str = "q") -> Series:
    """``q^{maj} u^{des} / (u;q)_n`` expanded under ``caps``."""
    num = Poly.var(q) ** alpha.maj() * Poly.var(u) ** alpha.des()
    return inverse(pochhammer(u, q, alpha.n), caps) * num
