"""
Verification suites.

A suite expands a :class:`SuiteConfig` into a list of independent instances,
each a pure function of its parameters.  Instances run in a process pool and
the reports come back in the order the suite listed them, so output does not
depend on scheduling.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import chars, hecke0, nsqsym, polyring, srring
from .combinat import (
    Composition,
    Multichain,
    Permutation,
    compositions,
    min_coset_reps,
    multichains,
    parse_composition,
    permutations,
    weak_compositions,
)
from .poly import Caps, Poly, Series, format_monomial, var_key

__all__ = [
    "SUITES",
    "MAX_N",
    "DEFAULT_BUDGET",
    "SuiteConfig",
    "ConfigError",
    "Outcome",
    "first_difference",
    "plan",
    "run_instance",
    "run_suite",
]

MAX_N = 8
DEFAULT_BUDGET = 5_000_000


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    n: int = 4
    kmax: int = 4
    degmax: int = 6
    lmax: int = 3
    workers: int = 1
    seed: int = 0
    budget: int = DEFAULT_BUDGET

    def validate(self) -> None:
        if self.suite not in SUITES:
            raise ConfigError(f"unknown suite {self.suite!r}; choose from {', '.join(SUITES)}")
        if not 1 <= self.n <= MAX_N:
            raise ConfigError(f"n out of range: {self.n} (need 1 <= n <= {MAX_N})")
        for name in ("kmax", "degmax", "lmax"):
            if getattr(self, name) < 0:
                raise ConfigError(f"{name} must be nonnegative")
        if self.workers < 1:
            raise ConfigError("workers must be at least 1")


@dataclass
class Outcome:
    ok: bool
    witness: dict | None = None


@dataclass(frozen=True)
class Instance:
    identity: str
    params: tuple = ()
    cost: int = 1

    def kwargs(self) -> dict:
        return dict(self.params)


def _inst(identity: str, cost: int = 1, **params) -> Instance:
    return Instance(identity, tuple(params.items()), cost)


# -- witnesses ------------------------------------------------------------------


def _mono_text(m) -> str:
    return format_monomial(m) or "1"


def _poly_witness(a: Poly, b: Poly, label: str = "") -> dict | None:
    keys = sorted(set(a.terms) | set(b.terms), key=lambda m: [(var_key(v), e) for v, e in m])
    for m in keys:
        ca, cb = a.terms.get(m, 0), b.terms.get(m, 0)
        if ca != cb:
            mono = _mono_text(m)
            if label:
                mono = label if mono == "1" else f"{label}*{mono}"
            return {"monomial": mono, "lhs": str(ca), "rhs": str(cb)}
    return None


def first_difference(a, b) -> dict | None:
    """First differing coefficient of two polynomials, series or basis expansions."""
    if isinstance(a, Series):
        a = a.poly
    if isinstance(b, Series):
        b = b.poly
    if isinstance(a, Poly) or isinstance(b, Poly):
        return _poly_witness(Poly.coerce(a), Poly.coerce(b))
    if isinstance(a, nsqsym._BasisElt):
        comps = sorted(set(a.terms) | set(b.terms), key=nsqsym._comp_order)
        for c in comps:
            w = _poly_witness(a.coeff(c), b.coeff(c), f"{a.basis}[{','.join(map(str, c.parts))}]")
            if w:
                return w
        return None
    if a != b:
        return {"monomial": "", "lhs": str(a), "rhs": str(b)}
    return None


def _compare(a, b) -> Outcome:
    w = first_difference(a, b)
    return Outcome(w is None, w)


def _all_equal(*xs) -> Outcome:
    for a, b in zip(xs, xs[1:]):
        w = first_difference(a, b)
        if w:
            return Outcome(False, w)
    return Outcome(True)


def _fail(where: str, lhs, rhs) -> Outcome:
    return Outcome(False, {"monomial": where, "lhs": str(lhs), "rhs": str(rhs)})


# -- checks: Stanley-Reisner ring -------------------------------------------------


def _y(m: Multichain) -> srring.SRElement:
    return srring.SRElement.monomial(m)


def _word_on(m: Multichain, word: Iterable[int]) -> srring.SRElement:
    f = _y(m)
    for i in reversed(list(word)):
        f = srring.hecke_action(i, f)
    return f


def check_sr_relations(n: int, kmax: int) -> Outcome:
    for m in srring.monomials(n, kmax):
        for i in range(1, n):
            a, b = _word_on(m, [i, i]), -_word_on(m, [i])
            if a != b:
                return _fail(f"pibar_{i}^2 y[{m}]", a, b)
            for j in range(i + 2, n):
                a, b = _word_on(m, [i, j]), _word_on(m, [j, i])
                if a != b:
                    return _fail(f"pibar_{i} pibar_{j} y[{m}]", a, b)
            if i + 1 < n:
                a, b = _word_on(m, [i, i + 1, i]), _word_on(m, [i + 1, i, i + 1])
                if a != b:
                    return _fail(f"braid {i} y[{m}]", a, b)
            img = srring.hecke_action(i, _y(m))
            if img and img.multidegrees() != {m.ranks()}:
                return _fail(f"multidegree pibar_{i} y[{m}]", img.multidegrees(), m.ranks())
    return Outcome(True)


def _x_monomials(n: int, degmax: int):
    for d in range(degmax + 1):
        for c in itertools.combinations_with_replacement(range(n), d):
            e = [0] * n
            for j in c:
                e[j] += 1
            yield polyring.XPoly.monomial(e)


def check_x_relations(n: int, degmax: int, transferred: bool) -> Outcome:
    op = polyring.transferred_demazure if transferred else polyring.demazure

    def word(f, w):
        for i in reversed(w):
            f = op(i, f)
        return f

    for f in _x_monomials(n, degmax):
        for i in range(1, n):
            if word(f, [i, i]) != -word(f, [i]):
                return _fail(f"pibar_{i}^2 {f}", word(f, [i, i]), -word(f, [i]))
            for j in range(i + 2, n):
                if word(f, [i, j]) != word(f, [j, i]):
                    return _fail(f"pibar_{i} pibar_{j} {f}", word(f, [i, j]), word(f, [j, i]))
            if i + 1 < n and word(f, [i, i + 1, i]) != word(f, [i + 1, i, i + 1]):
                return _fail(f"braid {i} {f}", word(f, [i, i + 1, i]), word(f, [i + 1, i, i + 1]))
    return Outcome(True)


def check_module_relations(n: int) -> Outcome:
    for a in compositions(n):
        for name, rep, alt in (
            ("P", hecke0.projective_module(a), hecke0.projective_module_from_algebra(a)),
            ("C", hecke0.cyclic_module(a), hecke0.cyclic_module_from_algebra(a)),
        ):
            if not hecke0.check_relations(rep):
                return _fail(f"relations {name}_{a}", "fail", "pass")
            if rep.action != alt.action:
                return _fail(f"{name}_{a} table vs algebra", rep.to_json(), alt.to_json())
        if not hecke0.check_relations(hecke0.simple_module(a)):
            return _fail(f"relations simple_{a}", "fail", "pass")
    return Outcome(True)


def _rank(rows: list[list[int]], ncols: int) -> int:
    if not rows:
        return 0
    return int(np.linalg.matrix_rank(np.array(rows, dtype=float).reshape(-1, ncols)))


def check_invariants(n: int, kmax: int) -> Outcome:
    """Per rank multiset: both invariant spaces are the line through the theta-monomial."""
    by_ranks: dict[tuple, list[Multichain]] = defaultdict(list)
    for m in srring.monomials(n, kmax):
        by_ranks[m.ranks()].append(m)
    for ranks, basis in sorted(by_ranks.items()):
        exps = [ranks.count(r) for r in range(n + 1)]
        th = srring.theta_power(exps, n)
        if set(th.terms) != set(basis) or set(th.terms.values()) != {1}:
            return _fail(f"theta^{exps}", th, "sum of all monomials with these ranks")
        index = {m: j for j, m in enumerate(basis)}
        d = len(basis)
        hecke_rows, sym_rows = [], []
        for i in range(1, n):
            if srring.hecke_action(i, th) or srring.sym_action(i, th) != th:
                return _fail(f"generator {i} on theta^{exps}", "not invariant", "invariant")
            hk = np.zeros((d, d), dtype=np.int64)
            sy = -np.eye(d, dtype=np.int64)
            for j, m in enumerate(basis):
                for m2, c in srring.hecke_action(i, _y(m)).terms.items():
                    hk[index[m2], j] += c
                for m2, c in srring.sym_action(i, _y(m)).terms.items():
                    sy[index[m2], j] += c
            hecke_rows.extend(hk.tolist())
            sym_rows.extend(sy.tolist())
        for name, rows in (("pibar", hecke_rows), ("s_i - 1", sym_rows)):
            kernel = d - _rank(rows, d)
            if kernel != 1:
                return _fail(f"kernel of {name} on ranks {ranks}", kernel, 1)
    return Outcome(True)


def check_theta_linearity(n: int, kmax: int) -> Outcome:
    thetas = [srring.theta(r, n) for r in range(n + 1)]
    for m in srring.monomials(n, max(kmax - 1, 0)):
        f = _y(m)
        for r, th in enumerate(thetas):
            for i in range(1, n):
                a = srring.hecke_action(i, th * f)
                b = th * srring.hecke_action(i, f)
                if a != b:
                    return _fail(f"pibar_{i}(theta_{r} y[{m}])", a, b)
    return Outcome(True)


def check_straighten_roundtrip(n: int, kmax: int, seed: int, samples: int) -> Outcome:
    rng = random.Random(seed)
    pool = srring.monomials(n, kmax)
    for _ in range(samples):
        f = srring.SRElement.zero(n)
        for m in rng.sample(pool, min(len(pool), rng.randint(1, 5))):
            f = f + _y(m).scale(rng.choice([-3, -2, -1, 1, 2, 3]))
        back = srring.expand(srring.straighten(f), n)
        if back != f:
            return _fail("expand(straighten(f))", back, f)
    return Outcome(True)


def check_rank_selection(n: int, kmax: int) -> Outcome:
    for a in compositions(n):
        for m in srring.monomials(n, kmax):
            for i in range(1, n):
                lhs = srring.rank_selection(srring.hecke_action(i, _y(m)), a)
                rhs = srring.hecke_action(i, srring.rank_selection(_y(m), a))
                if lhs != rhs:
                    return _fail(f"phi_{a} pibar_{i} y[{m}]", lhs, rhs)
    return Outcome(True)


# -- checks: modules and theorems ------------------------------------------------------


def check_lemma_na(n: int, k: int) -> Outcome:
    for a in weak_compositions(n, k + 1):
        if not chars.lemma_na_check(a):
            return _fail(f"y_M -> pibar_sigma pi_w0 for alpha={a}", "not equivariant", "equivariant")
        w = first_difference(chars.component_char_from_module(a), chars.component_char(a))
        if w:
            return Outcome(False, w)
    return Outcome(True)


def check_cyclic_ch(n: int) -> Outcome:
    """Ch_q of the cyclic modules by both routes against the closed formula."""
    q = Poly.var("q")
    for a in compositions(n):
        rep = hecke0.cyclic_module(a)
        expected = nsqsym.QSymElt("F")
        for w in min_coset_reps(a):
            expected = expected + nsqsym.QSymElt(
                "F", {Composition.from_descent_set(w.inverse().descent_set(), n): q ** w.inv()}
            )
        out = _all_equal(chars.triangular_ch(rep), chars.filtration_ch(rep), expected)
        if not out.ok:
            return out
    return Outcome(True)


def check_theorem1(alpha: str) -> Outcome:
    a = parse_composition(alpha)
    try:
        report = chars.theorem1_report(a)
    except chars.EquivarianceError as exc:
        return _fail(f"Q_beta vs P_beta for alpha={a}", exc, "equivariant")
    for part, ok in report.items():
        if not ok:
            return _fail(f"{part} alpha={a}", "fail", "pass")
    return Outcome(True)


def check_regular(n: int) -> Outcome:
    a = Composition((1,) * n)
    rep = chars.quotient_module(a)
    if rep.dim != math.factorial(n):
        return _fail("dimension", rep.dim, math.factorial(n))
    expected = nsqsym.NSymElt("s", {b: chars.t_monomial(b.descent_set()) for b in compositions(n)})
    return _compare(chars.nc_char_quotient(a, rep), expected)


def check_theorem2(n: int, K: int) -> Outcome:
    return _all_equal(chars.theorem2_lhs(n, K), chars.theorem2_mid(n, K), chars.theorem2_rhs(n, K))


def check_bz_inner(n: int) -> Outcome:
    for m1 in range(1, n + 1):
        for m2 in range(1, n + 1):
            for a in compositions(m1):
                ha = nsqsym.hall_littlewood(a, False)
                for b in compositions(m2):
                    got = nsqsym.bz_inner(ha, nsqsym.hall_littlewood(b, False))
                    want = (-1) ** (a.n + len(a)) if a == b.complement() else 0
                    if got != Poly.const(want):
                        return _fail(f"<H_{a}, H_{b}>", got, want)
    return Outcome(True)


def check_product_formula(total: int) -> Outcome:
    for m in range(2, total + 1):
        for ma in range(1, m):
            for a in compositions(ma):
                for b in compositions(m - ma):
                    lhs = nsqsym.hall_littlewood(a, False) * nsqsym.hall_littlewood(b, False)
                    w = first_difference(lhs, nsqsym.product_formula_rhs(a, b))
                    if w:
                        w["monomial"] = f"H_{a}*H_{b}: {w['monomial']}"
                        return Outcome(False, w)
    return Outcome(True)


def check_periodic(n: int, bmax: int) -> Outcome:
    for ma in range(1, n + 1):
        for mb in range(1, bmax + 1):
            for a in compositions(ma):
                for b in compositions(mb):
                    if not nsqsym.periodic_corollary_check(a, b):
                        return _fail(f"H_{a} H_{b}(t|{ma})", "lhs", "rhs differ")
    return Outcome(True)


def _sides(fn: Callable, *args) -> Outcome:
    return _compare(*fn(*args))


def check_gg(n: int, L: int) -> Outcome:
    return _sides(chars.garsia_gessel_sides, n, L)


def check_gg_second(n: int, L: int) -> Outcome:
    return _sides(chars.garsia_gessel_second_sides, n, L)


def check_mc(n: int, K: int, qcap: int) -> Outcome:
    out = _sides(chars.macmahon_carlitz_sides, n, K, qcap)
    return out if not out.ok else _sides(chars.eulerian_sides, n, K)


def check_abr(n: int, L: int) -> Outcome:
    out = _sides(chars.abr_sides, n, L)
    return out if not out.ok else _sides(chars.abr_intermediate_sides, n, L)


def check_box(n: int, k: int) -> Outcome:
    return _all_equal(*chars.box_sides(n, k))


# -- checks: the polynomial ring ---------------------------------------------------------


def check_transfer_counterexample() -> Outcome:
    y1 = Multichain.from_lists([[1], [1]], 2)
    y2 = Multichain.from_lists([[2], [2]], 2)
    img = srring.hecke_action(1, _y(y1))
    if img != _y(y2):
        return _fail("pibar_1(y_1^2)", img, _y(y2))
    x1sq = polyring.XPoly.monomial((2, 0))
    dem = polyring.demazure(1, x1sq)
    expected = polyring.XPoly(2, {(0, 2): 1, (1, 1): 1})
    if dem != expected:
        return _fail("pibar_1(x_1^2)", dem, expected)
    tau = srring.transfer(_y(y2))
    if dem == tau:
        return _fail("pibar_1(x_1^2) vs tau(y_2^2)", dem, "must differ")
    return Outcome(True)


def check_transfer_equivariance(n: int, kmax: int) -> Outcome:
    for m in srring.monomials(n, kmax, include_empty_set=False):
        f = _y(m)
        for i in range(1, n):
            lhs = polyring.transferred_demazure(i, srring.transfer(f))
            rhs = srring.transfer(srring.hecke_action(i, f))
            if lhs != rhs:
                return _fail(f"pibar'_{i} tau(y[{m}])", lhs, rhs)
    return Outcome(True)


def check_demazure_fraction(n: int, degmax: int, seed: int, samples: int) -> Outcome:
    rng = random.Random(seed)
    monos = list(_x_monomials(n, degmax))
    for _ in range(samples):
        f = polyring.XPoly(n)
        for m in rng.sample(monos, min(len(monos), rng.randint(1, 4))):
            f = f + m * rng.choice([-2, -1, 1, 2])
        for i in range(1, n):
            a, b = polyring.demazure(i, f), polyring.demazure_fraction(i, f)
            if a != b:
                return _fail(f"pibar_{i}({f})", a, b)
    return Outcome(True)


# -- checks: specializations ------------------------------------------------------------

P211_LNT = (
    "s[4] + y011*s[3,1] + y01*s[2,2] + y01*y011*s[2,1,1] + y0*s[1,3] + y0*y011*s[1,2,1]"
    " + y0*y01*s[1,1,2] + y0*y01*y011*s[1,1,1,1]"
)


def check_lnt_example() -> Outcome:
    a = Composition.of(2, 1, 1)
    got = nsqsym.specialize(chars.nc_char_quotient(Composition.of(1, 1, 1, 1)), nsqsym.lnt_substitution(a))
    # the quotient of B_{1111} is H~_{1111}; its LNT image at u(211) is the P_{211} expansion
    text = got.to_text(factor=False)
    return Outcome(text == P211_LNT, None if text == P211_LNT else
                   {"monomial": "P_211", "lhs": text, "rhs": P211_LNT})


def check_unitriangular(n: int) -> Outcome:
    for m in range(1, n + 1):
        if not nsqsym.hl_transition_is_unitriangular(m):
            return _fail(f"H to s transition at size {m}", "not unitriangular", "unitriangular")
    return Outcome(True)


def check_ps(n: int, ucap: int, qcap: int) -> Outcome:
    caps = Caps.make({"u": ucap, "q": qcap})
    for a in compositions(n):
        out = _compare(nsqsym.ps_generating_function(a, caps), nsqsym.ps_generating_function_closed(a, caps))
        if not out.ok:
            return out
    return Outcome(True)


def check_specialize_ribbon(n: int, seed: int, samples: int) -> Outcome:
    rng = random.Random(seed)
    names = ["t1", "t2", "t3", "q", "t"]
    for _ in range(samples):
        a = rng.choice(compositions(rng.randint(1, max(1, n - 1))))
        b = rng.choice(compositions(rng.randint(1, max(1, n - a.n))))
        ca = Poly.var(rng.choice(names)) + rng.randint(-2, 2)
        cb = Poly.var(rng.choice(names)) * rng.randint(1, 3)
        subst = {v: Poly.var("q") ** rng.randint(0, 2) + rng.randint(0, 1) for v in names}
        x = nsqsym.NSymElt("s", {a: ca})
        y = nsqsym.NSymElt("s", {b: cb})
        lhs = nsqsym.specialize(x * y, subst)
        rhs = nsqsym.specialize(x, subst) * nsqsym.specialize(y, subst)
        out = _compare(lhs, rhs)
        if not out.ok:
            return out
    return Outcome(True)


def check_star(n: int, K: int) -> Outcome:
    out = _sides(chars.star_ch_sides, n, K)
    return out if not out.ok else _sides(chars.star_nc_sides, n, K)


CHECKS: dict[str, Callable[..., Outcome]] = {
    "sr-relations": check_sr_relations,
    "demazure-relations": lambda n, degmax: check_x_relations(n, degmax, False),
    "transferred-relations": lambda n, degmax: check_x_relations(n, degmax, True),
    "module-relations": check_module_relations,
    "invariant-algebra": check_invariants,
    "theta-linearity": check_theta_linearity,
    "straighten-roundtrip": check_straighten_roundtrip,
    "rank-selection": check_rank_selection,
    "lemma-Na": check_lemma_na,
    "cyclic-ch": check_cyclic_ch,
    "theorem-1": check_theorem1,
    "regular-representation": check_regular,
    "theorem-2": check_theorem2,
    "bz-inner": check_bz_inner,
    "product-formula": check_product_formula,
    "periodic-corollary": check_periodic,
    "garsia-gessel": check_gg,
    "garsia-gessel-second": check_gg_second,
    "macmahon-carlitz": check_mc,
    "abr": check_abr,
    "box": check_box,
    "transfer-counterexample": check_transfer_counterexample,
    "transfer-equivariance": check_transfer_equivariance,
    "demazure-fraction": check_demazure_fraction,
    "lnt-example": check_lnt_example,
    "hl-unitriangular": check_unitriangular,
    "principal-specialization": check_ps,
    "specialize-ribbon": check_specialize_ribbon,
    "star-characteristics": check_star,
}


# -- suites ------------------------------------------------------------------------------
# costs are rough counts of the largest enumeration an instance performs


def _chains(n: int, k: int) -> int:
    return sum((j + 1) ** n for j in range(k + 1))


def _suite_relations(c: SuiteConfig) -> list[Instance]:
    out = []
    for m in range(1, c.n + 1):
        out.append(_inst("sr-relations", _chains(m, 3) * m, n=m, kmax=3))
        out.append(_inst("demazure-relations", math.comb(c.degmax + m, m) * m, n=m, degmax=c.degmax))
        out.append(_inst("transferred-relations", math.comb(c.degmax + m, m) * m, n=m, degmax=c.degmax))
        out.append(_inst("module-relations", math.factorial(m) * 2 ** m, n=m))
    return out


def _suite_invariants(c: SuiteConfig) -> list[Instance]:
    return [_inst("invariant-algebra", _chains(m, 3) * m, n=m, kmax=3) for m in range(1, c.n + 1)]


def _suite_theta(c: SuiteConfig) -> list[Instance]:
    out = []
    for m in range(1, c.n + 1):
        out.append(_inst("theta-linearity", _chains(m, 2) * 2 ** m, n=m, kmax=3))
        out.append(_inst("straighten-roundtrip", _chains(m, 3), n=m, kmax=3, seed=c.seed + m, samples=50))
        out.append(_inst("rank-selection", _chains(m, 2) * 2 ** m, n=m, kmax=2))
    return out


def _suite_lemma(c: SuiteConfig) -> list[Instance]:
    out = []
    for m in range(1, c.n + 1):
        for k in range(min(c.kmax, 3) + 1):
            out.append(_inst("lemma-Na", math.comb(m + k, k) * math.factorial(m), n=m, k=k))
        out.append(_inst("cyclic-ch", math.factorial(m) * 2 ** m, n=m))
    return out


def _suite_theorem1(c: SuiteConfig) -> list[Instance]:
    out = []
    for m in range(1, c.n + 1):
        cost = math.factorial(m) * _chains(m, m)
        out += [_inst("theorem-1", cost, alpha=",".join(map(str, a.parts))) for a in compositions(m)]
        out.append(_inst("regular-representation", cost, n=m))
    return out


def _suite_theorem2(c: SuiteConfig) -> list[Instance]:
    return [_inst("theorem-2", _chains(m, c.kmax) * m, n=m, K=c.kmax) for m in range(1, c.n + 1)]


def _suite_bz(c: SuiteConfig) -> list[Instance]:
    return [_inst("bz-inner", 4 ** c.n, n=c.n)]


def _suite_product(c: SuiteConfig) -> list[Instance]:
    return [
        _inst("product-formula", 4 ** (c.n + 2), total=c.n + 2),
        _inst("periodic-corollary", 4 ** c.n * 8, n=c.n, bmax=3),
    ]


def _suite_gg(c: SuiteConfig) -> list[Instance]:
    out = []
    for m in range(1, c.n + 1):
        cost = math.comb(c.lmax + m, m) * (c.lmax + 1) ** m * (c.lmax + 1) ** 2
        out.append(_inst("garsia-gessel", cost, n=m, L=c.lmax))
        out.append(_inst("garsia-gessel-second", cost, n=m, L=c.lmax))
    return out


def _suite_mc(c: SuiteConfig) -> list[Instance]:
    return [_inst("macmahon-carlitz", math.factorial(m) + (c.kmax + 1) ** 3, n=m, K=c.kmax, qcap=c.degmax)
            for m in range(1, c.n + 1)]


def _suite_abr(c: SuiteConfig) -> list[Instance]:
    return [_inst("abr", math.factorial(m) * math.comb(c.lmax + m, m), n=m, L=c.lmax)
            for m in range(1, c.n + 1)]


def _suite_box(c: SuiteConfig) -> list[Instance]:
    return [_inst("box", (k + 1) ** m * m, n=m, k=k) for m in range(1, c.n + 1) for k in range(c.kmax + 1)]


def _suite_transfer(c: SuiteConfig) -> list[Instance]:
    out = [_inst("transfer-counterexample")]
    for m in range(1, c.n + 1):
        out.append(_inst("transfer-equivariance", _chains(m, 3) * m, n=m, kmax=3))
        out.append(_inst("demazure-fraction", math.comb(c.degmax + m, m), n=m, degmax=c.degmax,
                         seed=c.seed + m, samples=40))
    return out


def _suite_specializations(c: SuiteConfig) -> list[Instance]:
    out = [_inst("lnt-example"), _inst("hl-unitriangular", 4 ** c.n, n=c.n)]
    for m in range(1, c.n + 1):
        out.append(_inst("principal-specialization", 2 ** m * math.comb(4 + m, m), n=m, ucap=4, qcap=8))
        out.append(_inst("star-characteristics", _chains(m, c.kmax) * math.factorial(m), n=m, K=c.kmax))
    out.append(_inst("specialize-ribbon", 100, n=c.n, seed=c.seed, samples=30))
    return out


SUITES: dict[str, Callable[[SuiteConfig], list[Instance]]] = {
    "relations": _suite_relations,
    "invariants": _suite_invariants,
    "theta-linearity": _suite_theta,
    "lemma-Na": _suite_lemma,
    "theorem-1": _suite_theorem1,
    "theorem-2": _suite_theorem2,
    "bz-inner": _suite_bz,
    "product-formula": _suite_product,
    "garsia-gessel": _suite_gg,
    "macmahon-carlitz": _suite_mc,
    "abr": _suite_abr,
    "box": _suite_box,
    "transfer-counterexample": _suite_transfer,
    "specializations": _suite_specializations,
}


def plan(cfg: SuiteConfig) -> list[Instance]:
    """Validate ``cfg`` and list its instances; refuses plans over the memory budget."""
    cfg.validate()
    instances = SUITES[cfg.suite](cfg)
    for inst in instances:
        if inst.cost > cfg.budget:
            params = ", ".join(f"{k}={v}" for k, v in inst.params)
            raise ConfigError(
                f"{inst.identity}({params}) would enumerate about {inst.cost:,} objects, "
                f"over the budget of {cfg.budget:,}; lower --n or the caps"
            )
    return instances


def run_instance(inst: Instance, timing: bool = True) -> dict:
    start = time.perf_counter()
    outcome = CHECKS[inst.identity](**inst.kwargs())
    millis = int((time.perf_counter() - start) * 1000) if timing else 0
    report = {
        "identity": inst.identity,
        "params": dict(inst.params),
        "status": "pass" if outcome.ok else "fail",
    }
    if outcome.witness is not None:
        report["witness"] = outcome.witness
    report["millis"] = millis
    return report


def run_suite(cfg: SuiteConfig, timing: bool = True) -> list[dict]:
    instances = plan(cfg)
    if cfg.workers == 1 or len(instances) == 1:
        return [run_instance(i, timing) for i in instances]
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        # map preserves submission order, which is the suite's canonical order
        return list(pool.map(run_instance, instances, itertools.repeat(timing)))
