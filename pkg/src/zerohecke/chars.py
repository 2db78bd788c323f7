"""
Characteristics of 0-Hecke modules coming from the Stanley-Reisner ring,
and the identities they specialize to.

Most checks come as a ``*_sides`` function returning the two quantities to
compare, plus a boolean ``*_check`` wrapper.  The sides are built by
independent routes (module computation vs closed formula vs enumeration).
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from typing import Callable, Iterable, Mapping

import numpy as np

from . import _kernels
from .combinat import (
    Composition,
    Multichain,
    Permutation,
    WeakComposition,
    compositions,
    min_coset_reps,
    multichains,
    permutations,
    weak_compositions,
)
from .hecke0 import (
    GENERAL,
    MOVE,
    NEG,
    Column,
    ModuleRep,
    cyclic_module,
    length_filtration,
    projective_module,
)
from .nsqsym import NSymElt, QSymElt, hall_littlewood, qt_substitution, specialize, bz_substitution
from .poly import Caps, Poly, Series, inverse, pochhammer, q_integer
from .srring import (
    SRElement,
    descent_monomial,
    hecke_action,
    hecke_on_monomial,
    rank_selection,
    straighten,
)

__all__ = [
    "EquivarianceError",
    "triangular_ch",
    "filtration_ch",
    "t_monomial",
    "component_module",
    "component_char",
    "component_char_from_module",
    "lemma_na_check",
    "quotient_module",
    "nc_char_quotient",
    "theorem1_report",
    "theorem2_lhs",
    "theorem2_mid",
    "theorem2_rhs",
    "garsia_gessel_sides",
    "garsia_gessel_check",
    "garsia_gessel_literal_sides",
    "garsia_gessel_second_sides",
    "macmahon_carlitz_sides",
    "macmahon_carlitz_check",
    "eulerian_sides",
    "abr_sides",
    "abr_intermediate_sides",
    "abr_check",
    "box_sides",
    "star_ch_sides",
    "star_nc_sides",
    "bipartite_partitions",
]

Q = Poly.var("q")


class EquivarianceError(AssertionError):
    """An explicit module isomorphism failed to commute with a generator."""


def _F(ds: Iterable[int], n: int) -> Composition:
    return Composition.from_descent_set(ds, n)


def t_monomial(ranks: Iterable[int], prefix: str = "t") -> Poly:
    exps = Counter(ranks)
    return Poly.monomial({f"{prefix}{r}": e for r, e in exps.items()})


# -- quasisymmetric characteristics of monomial modules -----------------------


def triangular_ch(rep: ModuleRep, level: Callable[[int], int] | None = None) -> QSymElt:
    """``sum_b q^{level(b)} F_{S(b)}`` with ``S(b)`` the generators that negate ``b``.

    ``level`` defaults to the Hecke length of the permutation labelling each basis
    vector.  Every move must strictly raise the level, which makes the level
    filtration a chain of submodules whose factors are one-dimensional.
    """
    if level is None:
        level = lambda j: rep.basis[j].inv()  # noqa: E731
    levels = [level(j) for j in range(rep.dim)]
    negated: list[set[int]] = [set() for _ in range(rep.dim)]
    for i, row in enumerate(rep.action, 1):
        for j, col in enumerate(row):
            if col.kind == GENERAL:
                raise ValueError(f"generator {i} has a non-monomial column at basis index {j}")
            if col.kind == NEG:
                negated[j].add(i)
            elif col.kind == MOVE:
                (target, _), = col.entries
                if levels[target] <= levels[j]:
                    raise ValueError(
                        f"generator {i} moves basis index {j} without raising its level"
                    )
    out: dict[Composition, Poly] = {}
    for j in range(rep.dim):
        a = _F(negated[j], rep.n)
        out[a] = out.get(a, Poly()) + Q ** levels[j]
    return QSymElt("F", out)


def filtration_ch(rep: ModuleRep) -> QSymElt:
    """Length-graded Ch from the explicit filtration ``N^(l)`` using the generator matrices.

    Checks that each ``N^(l)`` is stable and that every factor acts diagonally by
    0 or -1 before reading off its composition factors.
    """
    layers = length_filtration(rep)
    mats = [rep.matrix(i) for i in range(1, rep.n)]
    out: dict[Composition, Poly] = {}
    for l, (cur, nxt) in enumerate(zip(layers, layers[1:])):
        cur_set, nxt_set = set(cur), set(nxt)
        outside = [k for k in range(rep.dim) if k not in cur_set]
        for m in mats:
            if outside and np.any(m[np.ix_(outside, cur)]):
                raise ValueError(f"layer {l} is not a submodule")
        top = [j for j in cur if j not in nxt_set]
        for j in top:
            ds = set()
            for i, m in enumerate(mats, 1):
                diag = m[j, j]
                others = [k for k in top if k != j and m[k, j]]
                if others or diag not in (0, -1):
                    raise ValueError(f"layer {l} factor is not a sum of simples in this basis")
                if diag == -1:
                    ds.add(i)
            a = _F(ds, rep.n)
            out[a] = out.get(a, Poly()) + Q ** l
    return QSymElt("F", out)


# -- homogeneous components -----------------------------------------------------


def component_module(alpha: WeakComposition) -> ModuleRep:
    """The span of ``y_M`` with ``alpha(M) = alpha``, as a module built from the ring action."""
    n = alpha.n
    basis = [Multichain.decode(alpha, w) for w in min_coset_reps(alpha)]
    index = {m: j for j, m in enumerate(basis)}
    action = []
    for i in range(1, n):
        row = []
        for j, m in enumerate(basis):
            img = hecke_on_monomial(i, m)
            col = {} if img is None else {index[img[1]]: img[0]}
            row.append(Column.from_dict(col, j))
        action.append(row)
    return ModuleRep(n, basis, action)


def component_char(alpha: WeakComposition) -> QSymElt:
    """``sum_{w in S^alpha} q^{inv w} t^{D(alpha)} F_{D(w^-1)}`` from the closed formula."""
    tm = t_monomial(alpha.descent_multiset())
    out: dict[Composition, Poly] = {}
    for w in min_coset_reps(alpha):
        a = _F(w.inverse().descent_set(), alpha.n)
        out[a] = out.get(a, Poly()) + Q ** w.inv() * tm
    return QSymElt("F", out)


def component_char_from_module(alpha: WeakComposition) -> QSymElt:
    rep = component_module(alpha)
    ch = triangular_ch(rep, lambda j: rep.basis[j].sigma().inv())
    return ch.scale(t_monomial(alpha.descent_multiset()))


def lemma_na_check(alpha: WeakComposition) -> bool:
    """``y_M -> pibar_{sigma(M)} pi_{w_0(alpha^c)}`` intertwines the two actions."""
    ring = component_module(alpha)
    cyc = cyclic_module(alpha)
    cyc_index = {w: j for j, w in enumerate(cyc.basis)}
    to_cyc = [cyc_index[m.sigma()] for m in ring.basis]
    if sorted(to_cyc) != list(range(cyc.dim)):
        return False
    for i in range(1, alpha.n):
        for j in range(ring.dim):
            mapped = {to_cyc[k]: v for k, v in ring.action[i - 1][j].entries}
            if mapped != cyc.action[i - 1][to_cyc[j]].as_dict():
                return False
    return True


# -- Theorem: noncommutative characteristic of the quotient ----------------------


def quotient_module(alpha: Composition) -> ModuleRep:
    """``F[B_alpha]/(Theta_alpha)`` on the basis ``Y_w``, ``w`` in S^alpha.

    Each image ``pibar_i(Y_w)`` is rank-selected, straightened over ``F[Theta]``
    and reduced modulo ``Theta_alpha`` by dropping every term with a nonzero
    theta exponent.
    """
    n = alpha.n
    basis = min_coset_reps(alpha)
    index = {w: j for j, w in enumerate(basis)}
    zero = (0,) * (n + 1)
    action = []
    for i in range(1, n):
        row = []
        for j, w in enumerate(basis):
            img = rank_selection(hecke_action(i, SRElement.monomial(descent_monomial(w))), alpha)
            col: dict[int, int] = {}
            for v, bucket in straighten(img).items():
                c = bucket.get(zero, 0)
                if c:
                    if v not in index:
                        raise EquivarianceError(f"{v} escaped the descent basis of {alpha}")
                    col[index[v]] = c
            row.append(Column.from_dict(col, j))
        action.append(row)
    return ModuleRep(n, basis, action)


def nc_char_quotient(alpha: Composition, rep: ModuleRep | None = None) -> NSymElt:
    """``sum_{beta <= alpha} t^{D(beta)} s_beta``, read off after checking each ``Q_beta = P_beta``."""
    rep = rep if rep is not None else quotient_module(alpha)
    blocks: dict[frozenset, list[int]] = {}
    for j, w in enumerate(rep.basis):
        blocks.setdefault(w.descent_set(), []).append(j)
    out: dict[Composition, Poly] = {}
    for ds, members in blocks.items():
        beta = _F(ds, alpha.n)
        proj = projective_module(beta)
        pidx = {w: k for k, w in enumerate(proj.basis)}
        if sorted(pidx) != sorted(rep.basis[j] for j in members):
            raise EquivarianceError(f"Q_{beta} and P_{beta} have different bases")
        for i in range(1, alpha.n):
            for j in members:
                got = {pidx[rep.basis[k]]: v for k, v in rep.action[i - 1][j].entries
                       if rep.basis[k] in pidx}
                leak = [k for k, _ in rep.action[i - 1][j].entries if rep.basis[k] not in pidx]
                want = proj.action[i - 1][pidx[rep.basis[j]]].as_dict()
                if leak or got != want:
                    raise EquivarianceError(
                        f"generator {i} on Y_{rep.basis[j]} disagrees with P_{beta}"
                    )
        out[beta] = t_monomial(ds)
    return NSymElt("s", out)


def _c(alpha: Composition, beta: Composition) -> int:
    return sum(alpha.descent_set() & beta.descent_set())


def theorem1_report(alpha: Composition) -> dict[str, bool]:
    """All parts of the quotient theorem for one composition."""
    rep = quotient_module(alpha)
    ch = nc_char_quotient(alpha, rep)
    n = alpha.n
    t = Poly.var("t")
    bz_expected = NSymElt("s", {b: t ** b.maj() for b in alpha.coarsenings()})
    result = {
        "dimension": rep.dim == len(min_coset_reps(alpha)),
        "block_dimensions": sum(len(projective_module(b).basis) for b in alpha.coarsenings()) == rep.dim,
        "nc_characteristic": ch == hall_littlewood(alpha, modified=True),
        "bz_specialization": specialize(ch, bz_substitution(n)) == bz_expected,
    }
    # mixed (q,t) specialization of the regular case, against the c-exponent formula
    full = nc_char_quotient(Composition((1,) * n))
    q = Poly.var("q")
    at = alpha.transpose()
    expected = {b: t ** _c(alpha, b) * q ** _c(at, b.reverse()) for b in compositions(n)}
    result["qt_specialization"] = specialize(full, qt_substitution(alpha)) == NSymElt("s", expected)
    return result


# -- Theorem: multigraded quasisymmetric characteristic ---------------------------


def _t_vars(n: int) -> list[str]:
    return [f"t{i}" for i in range(n + 1)]


def theorem2_caps(n: int, K: int) -> Caps:
    return Caps.make(total=K, total_vars=_t_vars(n))


def theorem2_lhs(n: int, K: int) -> QSymElt:
    """Sum over homogeneous components with at most ``K`` chain entries."""
    out = QSymElt("F")
    for k in range(K + 1):
        for alpha in weak_compositions(n, k + 1):
            out = out + component_char(alpha)
    return out


def theorem2_mid(n: int, K: int) -> QSymElt:
    """Descent-basis numerator times the Hilbert series of F[Theta], truncated at t-degree K."""
    caps = theorem2_caps(n, K)
    hilb = Poly.const(1)
    for i in range(n + 1):
        hilb = hilb * (1 - Poly.var(f"t{i}"))
    hilb_inv = inverse(hilb, caps)
    num: dict[Composition, Poly] = {}
    for w in permutations(n):
        a = _F(w.inverse().descent_set(), n)
        num[a] = num.get(a, Poly()) + Q ** w.inv() * t_monomial(w.descent_set())
    return QSymElt("F", {a: (hilb_inv * c).poly for a, c in num.items()})


def theorem2_rhs(n: int, K: int) -> QSymElt:
    """Word encoding: ``sum_k sum_{p in [k+1]^n} t_{p'_1}...t_{p'_k} q^{inv p} F_{D(p)}``."""
    out: dict[Composition, dict] = {}
    for k in range(K + 1):
        words = _kernels.word_array(n, k)
        invs = _kernels.inversions(words)
        masks = _kernels.descent_masks(words)
        primes = _kernels.prime_counts(words, k) if k else np.zeros((len(words), 0), np.int64)
        acc: dict[tuple, int] = {}
        for inv, mask, pr in zip(invs.tolist(), masks.tolist(), primes.tolist()):
            key = (mask, inv, tuple(sorted(pr)))
            acc[key] = acc.get(key, 0) + 1
        for (mask, inv, pr), cnt in acc.items():
            a = _F((i + 1 for i in range(max(n - 1, 0)) if mask >> i & 1), n)
            term = Q ** inv * t_monomial(pr) * cnt
            out[a] = out.get(a, Poly()) + term
    return QSymElt("F", out)


# -- permutation statistics corollaries ------------------------------------------


def _five_stat_numerator(n: int, with_q0: bool = True) -> Poly:
    V = Poly.var
    acc: Counter = Counter()
    for w in permutations(n):
        wi = w.inverse()
        acc[(w.inv() if with_q0 else 0, wi.maj(), wi.des(), w.maj(), w.des())] += 1
    out = Poly()
    for (a, b, c, d, e), cnt in acc.items():
        out = out + V("q0") ** a * V("q1") ** b * V("u1") ** c * V("q2") ** d * V("u2") ** e * cnt
    return out


def _gg_lhs(n: int, L: int, K: int, with_q0: bool) -> Poly:
    caps = Caps.make({"u1": L, "u2": K})
    denom = pochhammer("u1", "q1", n) * pochhammer("u2", "q2", n)
    return (inverse(denom, caps) * _five_stat_numerator(n, with_q0)).poly


def bipartite_partitions(n: int, L: int, K: int) -> Iterable[tuple[tuple[int, ...], tuple[int, ...]]]:
    """All of B(L, K): ``lambda`` weakly decreasing, ``mu`` weakly decreasing on plateaus of ``lambda``."""
    for lam in itertools.combinations_with_replacement(range(L, -1, -1), n):
        for mu in itertools.product(range(K + 1), repeat=n):
            if all(lam[i] > lam[i + 1] or mu[i] >= mu[i + 1] for i in range(n - 1)):
                yield lam, mu


def _gg_rhs(n: int, L: int, K: int, weight: Callable[[tuple[int, ...]], int]) -> Poly:
    # a pair counts towards u1^l u2^k for every l >= max(lambda), k >= max(mu)
    acc: Counter = Counter()
    for lam, mu in bipartite_partitions(n, L, K):
        acc[(weight(mu), sum(lam), sum(mu), max(lam, default=0), max(mu, default=0))] += 1
    terms: Counter = Counter()
    for (w, sl, sm, ml, mm), cnt in acc.items():
        for l in range(ml, L + 1):
            for k in range(mm, K + 1):
                terms[(("q0", w), ("q1", sl), ("q2", sm), ("u1", l), ("u2", k))] += cnt
    out: dict = {}
    for mono, c in terms.items():
        key = tuple((v, e) for v, e in mono if e)
        out[key] = out.get(key, 0) + c
    return Poly(out)


def inv_word(mu: tuple[int, ...]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(mu)), 2) if mu[i] > mu[j])


def coinv_word(mu: tuple[int, ...]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(mu)), 2) if mu[i] < mu[j])


def garsia_gessel_sides(n: int, L: int, K: int | None = None) -> tuple[Poly, Poly]:
    """Five-statistic identity with the ``q0`` weight transported from ``inv(p)``.

    Under ``mu_j = k + 1 - p_j`` the inversions of the word ``p`` become the
    pairs ``i < j`` with ``mu_i < mu_j``, so that is the weight on the
    bipartite-partition side.
    """
    K = L if K is None else K
    return _gg_lhs(n, L, K, True), _gg_rhs(n, L, K, coinv_word)


def garsia_gessel_literal_sides(n: int, L: int, K: int | None = None) -> tuple[Poly, Poly]:
    """Same identity with ``q0^{#{i<j : mu_i > mu_j}}``; it fails for every ``n >= 2``."""
    K = L if K is None else K
    return _gg_lhs(n, L, K, True), _gg_rhs(n, L, K, inv_word)


def garsia_gessel_check(n: int, L: int, K: int | None = None) -> bool:
    lhs, rhs = garsia_gessel_sides(n, L, K)
    return lhs == rhs


def garsia_gessel_second_sides(n: int, L: int, K: int | None = None) -> tuple[Poly, Poly]:
    """``q0 = 1`` version against the coefficient of ``z^n`` in a product of geometric series."""
    K = L if K is None else K
    lhs = _gg_lhs(n, L, K, False)
    zcaps = Caps.make({"z": n})
    z, q1, q2, u1, u2 = (Poly.var(v) for v in ("z", "q1", "q2", "u1", "u2"))
    rhs = Poly()
    for l in range(L + 1):
        for k in range(K + 1):
            prod = Series(Poly.const(1), zcaps)
            for i in range(l + 1):
                for j in range(k + 1):
                    prod = prod * inverse(1 - z * q1 ** i * q2 ** j, zcaps)
            coeff = Poly({tuple(p for p in m if p[0] != "z"): c
                          for m, c in prod.poly.terms.items() if dict(m).get("z", 0) == n})
            rhs = rhs + coeff * u1 ** l * u2 ** k
    return lhs, rhs


def _mc_lhs(n: int, K: int, q_value: int | None) -> Poly:
    V = Poly.var
    acc: Counter = Counter((w.maj(), w.des()) for w in permutations(n))
    num = Poly()
    for (m, d), cnt in acc.items():
        num = num + V("q") ** m * V("u") ** d * cnt
    denom = pochhammer("u", "q", n)
    if q_value is not None:
        num, denom = num.subs({"q": q_value}), denom.subs({"q": q_value})
    return (inverse(denom, Caps.make({"u": K})) * num).poly


def macmahon_carlitz_sides(n: int, K: int, qcap: int | None = None) -> tuple[Poly, Poly]:
    """``sum q^maj u^des / (u;q)_n`` vs ``sum_k [k+1]_q^n u^k`` up to ``u^K``.

    Every denominator factor carries ``u``, so the ``q``-degrees are finite and
    the comparison is exact; ``qcap`` optionally cuts both sides further.
    """
    lhs = _mc_lhs(n, K, None)
    rhs = Poly()
    for k in range(K + 1):
        rhs = rhs + q_integer(k + 1) ** n * Poly.var("u") ** k
    if qcap is not None:
        caps = Caps.make({"q": qcap})
        lhs, rhs = lhs.truncate(caps), rhs.truncate(caps)
    return lhs, rhs


def macmahon_carlitz_check(n: int, K: int, qcap: int | None = None) -> bool:
    lhs, rhs = macmahon_carlitz_sides(n, K, qcap)
    return lhs == rhs


def eulerian_sides(n: int, K: int) -> tuple[Poly, Poly]:
    """The ``q = 1`` case through the same code path: ``sum u^des / (1-u)^{n+1}`` vs ``sum (k+1)^n u^k``."""
    lhs = _mc_lhs(n, K, 1)
    rhs = Poly()
    for k in range(K + 1):
        rhs = rhs + Poly.var("u") ** k * (k + 1) ** n
    return lhs, rhs


def _multinomial(n: int, parts: Iterable[int]) -> int:
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def _prefix_q(i: int) -> Poly:
    return Poly.monomial({f"q{j}": 1 for j in range(1, i + 1)})


def _abr_rhs(n: int, Lcap: int) -> Poly:
    caps = Caps.make({"q1": Lcap})
    num = Poly()
    for w in permutations(n):
        term = Poly.const(1)
        for i in w.descent_set():
            term = term * _prefix_q(i)
        num = num + term
    denom = Poly.const(1)
    for i in range(1, n + 1):
        denom = denom * (1 - _prefix_q(i))
    return (inverse(denom, caps) * num).poly


def abr_sides(n: int, Lcap: int) -> tuple[Poly, Poly]:
    """Weak partitions with ``lambda_1 <= Lcap`` vs the descent sum over ``prod (1 - q_1...q_i)``.

    The ``q_1``-degree of every monomial on the right equals ``lambda_1``, so
    capping ``q_1`` at ``Lcap`` is exactly the cut on the left.
    """
    lhs = Poly()
    for lam in itertools.combinations_with_replacement(range(Lcap, -1, -1), n):
        mult = _multinomial(n, Counter(lam).values())
        lhs = lhs + Poly.monomial({f"q{i}": e for i, e in enumerate(lam, 1) if e}, mult)
    return lhs, _abr_rhs(n, Lcap)


def abr_intermediate_sides(n: int, Lcap: int) -> tuple[Poly, Poly]:
    """``sum_k sum_{alpha in Com_1(n, k+1)} multinomial(n; alpha) prod_{i in D(alpha)} q_1...q_i``."""
    lhs = Poly()
    for k in range(Lcap + 1):
        for alpha in weak_compositions(n, k + 1):
            if n and alpha.parts[0] == 0:
                continue
            term = Poly.const(_multinomial(n, alpha.parts))
            for d in alpha.descent_multiset():
                term = term * _prefix_q(d)
            lhs = lhs + term
    return lhs, _abr_rhs(n, Lcap)


def abr_check(n: int, Lcap: int) -> bool:
    lhs, rhs = abr_sides(n, Lcap)
    return lhs == rhs


def box_sides(n: int, k: int) -> tuple[Poly, Poly, Poly]:
    """Three ways to count boxes: ``[k+1]_q^n``, by rows ``k+1-p_j``, by columns ``p'_i``."""
    words = _kernels.word_array(n, k)
    rows = Counter(int(v) for v in (k + 1 - words).sum(axis=1))
    if k:
        cols = Counter(int(v) for v in _kernels.prime_counts(words, k).sum(axis=1))
    else:
        cols = Counter({0: len(words)})
    by_rows = sum((Q ** d * c for d, c in rows.items()), Poly())
    by_cols = sum((Q ** d * c for d, c in cols.items()), Poly())
    return q_integer(k + 1) ** n, by_rows, by_cols


# -- the ring without the empty set ----------------------------------------------


def star_ch_sides(n: int, K: int) -> tuple[QSymElt, QSymElt]:
    """``Ch_{q,t}(F[B_n^*])``: chains without the empty set, read off the action, vs the closed form."""
    direct: dict[Composition, Poly] = {}
    for k in range(K + 1):
        for m in multichains(n, k):
            if m.sets and m.sets[0] == 0:
                continue
            ds = {i for i in range(1, n) if (img := hecke_on_monomial(i, m)) and img[0] < 0}
            a = _F(ds, n)
            direct[a] = direct.get(a, Poly()) + Q ** m.sigma().inv() * t_monomial(m.ranks())
    caps = Caps.make(total=K, total_vars=_t_vars(n))
    denom = Poly.const(1)
    for i in range(1, n + 1):
        denom = denom * (1 - Poly.var(f"t{i}"))
    dinv = inverse(denom, caps)
    num: dict[Composition, Poly] = {}
    for w in permutations(n):
        a = _F(w.inverse().descent_set(), n)
        num[a] = num.get(a, Poly()) + Q ** w.inv() * t_monomial(w.descent_set())
    closed = QSymElt("F", {a: (dinv * c).poly for a, c in num.items()})
    return QSymElt("F", direct), closed


def star_nc_sides(n: int, K: int) -> tuple[Poly, Poly]:
    """Graded dimensions of ``F[B_n^*]`` up to t-degree ``K``.

    The closed form ``sum_alpha t^{D(alpha)} s_alpha / prod_{i>=1} (1 - t_i)``
    is paired against ``dim P_alpha`` and compared with a direct count of
    multichains without the empty set.
    """
    ch = nc_char_quotient(Composition((1,) * n))
    caps = Caps.make(total=K, total_vars=_t_vars(n))
    denom = Poly.const(1)
    for i in range(1, n + 1):
        denom = denom * (1 - Poly.var(f"t{i}"))
    dinv = inverse(denom, caps)
    num = Poly()
    for beta, c in ch.terms.items():
        num = num + c * len(projective_module(beta).basis)
    closed = (dinv * num).poly
    direct = Poly()
    for k in range(K + 1):
        for m in multichains(n, k):
            if not (m.sets and m.sets[0] == 0):
                direct = direct + t_monomial(m.ranks())
    return closed, direct
