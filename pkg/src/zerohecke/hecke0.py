"""
The 0-Hecke algebra H_n(0) in the ``pibar_w`` basis, and finite-dimensional
modules given by explicit generator tables.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Hashable, Mapping, Sequence

import numpy as np

from .combinat import (
    Composition,
    Permutation,
    WeakComposition,
    descent_class,
    longest_parabolic_element,
    min_coset_reps,
)

__all__ = [
    "HeckeElt",
    "ModuleRep",
    "Column",
    "gen",
    "pi",
    "pibar_w",
    "pi_w",
    "bruhat_leq",
    "projective_module",
    "simple_module",
    "cyclic_module",
    "cyclic_module_from_algebra",
    "projective_module_from_algebra",
    "check_relations",
    "length_filtration",
]


class HeckeElt:
    """Element of H_n(0) as ``{w: c}`` meaning ``sum c * pibar_w``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, int] | None = None):
        self.n = n
        self.terms = {w: c for w, c in (terms or {}).items() if c}
        for w in self.terms:
            if w.n != n:
                raise ValueError(f"permutation of size {w.n} in H_{n}(0)")

    @classmethod
    def one(cls, n: int) -> "HeckeElt":
        return cls(n, {Permutation.identity(n): 1})

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return HeckeElt(self.n, out)

    def __neg__(self):
        return HeckeElt(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HeckeElt(self.n, {w: c * other for w, c in self.terms.items()})
        return mult(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self == HeckeElt.one(self.n) * other
        if not isinstance(other, HeckeElt):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def left_gen(self, i: int) -> "HeckeElt":
        """``pibar_i * self``."""
        out: dict[Permutation, int] = {}
        for w, c in self.terms.items():
            if i in w.left_descents():
                out[w] = out.get(w, 0) - c
            else:
                v = w.left_simple(i)
                out[v] = out.get(v, 0) + c
        return HeckeElt(self.n, out)

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].inv(), kv[0].images))
        return " + ".join(f"{c}*pibar[{w}]" for w, c in items)

    __repr__ = __str__


def mult(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    if a.n != b.n:
        raise ValueError(f"cannot multiply elements of H_{a.n}(0) and H_{b.n}(0)")
    out = HeckeElt(a.n)
    for u, c in a.terms.items():
        x = b
        for i in reversed(u.reduced_word()):
            x = x.left_gen(i)
        out = out + x * c
    return out


def gen(i: int, n: int) -> HeckeElt:
    """The generator ``pibar_i``."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    return HeckeElt(n, {Permutation.simple(i, n): 1})


def pi(i: int, n: int) -> HeckeElt:
    """The generator ``pi_i = pibar_i + 1``."""
    return gen(i, n) + HeckeElt.one(n)


def pibar_w(w: Permutation) -> HeckeElt:
    return HeckeElt(w.n, {w: 1})


def pi_w(w: Permutation) -> HeckeElt:
    """``pi_{i_1} ... pi_{i_k}`` along a reduced word of ``w``."""
    out = HeckeElt.one(w.n)
    for i in reversed(w.reduced_word()):
        out = out.left_gen(i) + out
    return out


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Subword property on the greedy reduced word of ``w``."""
    if u.n != w.n:
        return False
    reachable = {Permutation.identity(w.n)}
    for i in reversed(w.reduced_word()):
        reachable |= {x.left_simple(i) for x in reachable if i not in x.left_descents()}
    return u in reachable


# -- modules -----------------------------------------------------------------

ZERO, NEG, MOVE, GENERAL = "zero", "neg", "move", "general"


@dataclass(frozen=True)
class Column:
    """Image of one basis vector under one generator, as a sparse column."""

    kind: str
    entries: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, col: Mapping[int, int], source: int) -> "Column":
        col = {k: v for k, v in col.items() if v}
        if not col:
            return cls(ZERO)
        if col == {source: -1}:
            return cls(NEG, ((source, -1),))
        if len(col) == 1:
            (k, v), = col.items()
            if v == 1 and k != source:
                return cls(MOVE, ((k, 1),))
        return cls(GENERAL, tuple(sorted(col.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


@dataclass
class ModuleRep:
    """A module for H_n(0): ``action[i-1][j]`` is the image of basis vector ``j`` under ``pibar_i``."""

    n: int
    basis: list[Hashable]
    action: list[list[Column]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self, i: int) -> np.ndarray:
        d = self.dim
        m = np.zeros((d, d), dtype=np.int64)
        for j, col in enumerate(self.action[i - 1]):
            for k, v in col.entries:
                m[k, j] += v
        return m

    def apply(self, i: int, vec: Mapping[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for j, c in vec.items():
            for k, v in self.action[i - 1][j].entries:
                out[k] = out.get(k, 0) + c * v
        return {k: v for k, v in out.items() if v}

    def is_monomial(self) -> bool:
        return all(col.kind != GENERAL for row in self.action for col in row)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "basis": [str(b) for b in self.basis],
                "action": [
                    [{"kind": c.kind, "entries": [list(e) for e in c.entries]} for c in row]
                    for row in self.action
                ],
            }
        )


def check_relations(rep: ModuleRep) -> bool:
    """True iff the generator matrices satisfy the H_n(0) relations."""
    n = rep.n
    if len(rep.action) != max(n - 1, 0):
        return False
    mats = [rep.matrix(i) for i in range(1, n)]
    for i, a in enumerate(mats):
        if not np.array_equal(a @ a, -a):
            return False
        for j in range(i + 2, len(mats)):
            b = mats[j]
            if not np.array_equal(a @ b, b @ a):
                return False
        if i + 1 < len(mats):
            b = mats[i + 1]
            if not np.array_equal(a @ b @ a, b @ a @ b):
                return False
    return True


def _rep_from_rule(n: int, basis: Sequence[Permutation], rule) -> ModuleRep:
    index = {w: j for j, w in enumerate(basis)}
    action = []
    for i in range(1, n):
        row = []
        for j, w in enumerate(basis):
            img = rule(i, w)
            col = {} if img is None else {index[img[1]]: img[0]}
            row.append(Column.from_dict(col, j))
        action.append(row)
    return ModuleRep(n, list(basis), action)


def projective_module(alpha: Composition) -> ModuleRep:
    """P_alpha on the basis ``pibar_w pi_{w_0(alpha^c)}`` with ``D(w) = D(alpha)``."""
    target = alpha.descent_set()
    basis = descent_class(alpha)

    def rule(i, w):
        if i in w.left_descents():
            return -1, w
        v = w.left_simple(i)
        if v.descent_set() <= target:
            return 1, v
        return None

    return _rep_from_rule(alpha.n, basis, rule)


def simple_module(alpha: Composition) -> ModuleRep:
    n = alpha.n
    ds = alpha.descent_set()
    action = [[Column(NEG, ((0, -1),)) if i in ds else Column(ZERO)] for i in range(1, n)]
    return ModuleRep(n, [str(alpha)], action)


def cyclic_module(alpha: WeakComposition | Composition) -> ModuleRep:
    """H_n(0) pi_{w_0(alpha^c)} on the basis ``pibar_w pi_{w_0(alpha^c)}``, ``w`` in S^alpha."""
    target = alpha.descent_set()
    basis = min_coset_reps(alpha)

    def rule(i, w):
        if i in w.left_descents():
            return -1, w
        v = w.left_simple(i)
        if v.descent_set() <= target:
            return 1, v
        return None

    return _rep_from_rule(alpha.n, basis, rule)


def _decompose(x: HeckeElt, basis: Sequence[Permutation], anchor: HeckeElt) -> dict[int, int]:
    """Coordinates of ``x`` in ``{pibar_w * anchor}``, read off from the ``pibar_w`` coefficients."""
    coords = {j: x.terms.get(w, 0) for j, w in enumerate(basis)}
    coords = {j: c for j, c in coords.items() if c}
    rebuilt = HeckeElt(x.n)
    for j, c in coords.items():
        rebuilt = rebuilt + mult(pibar_w(basis[j]), anchor) * c
    if rebuilt != x:
        raise ArithmeticError("element is not in the span of the given basis")
    return coords


def _module_from_algebra(n: int, basis: Sequence[Permutation], anchor: HeckeElt) -> ModuleRep:
    elems = [mult(pibar_w(w), anchor) for w in basis]
    action = []
    for i in range(1, n):
        row = []
        for j, e in enumerate(elems):
            row.append(Column.from_dict(_decompose(e.left_gen(i), basis, anchor), j))
        action.append(row)
    return ModuleRep(n, list(basis), action)


def _alpha_c_anchor(alpha) -> HeckeElt:
    comp = Composition.from_descent_set(alpha.descent_set(), alpha.n)
    return pi_w(longest_parabolic_element(comp.complement()))


def cyclic_module_from_algebra(alpha: WeakComposition | Composition) -> ModuleRep:
    """Same module as :func:`cyclic_module`, computed by multiplying inside H_n(0)."""
    return _module_from_algebra(alpha.n, min_coset_reps(alpha), _alpha_c_anchor(alpha))


def projective_module_from_algebra(alpha: Composition) -> ModuleRep:
    return _module_from_algebra(alpha.n, descent_class(alpha), _alpha_c_anchor(alpha))


def length_filtration(rep: ModuleRep) -> list[list[int]]:
    """Basis indices of ``N^(l)`` for ``l = 0, 1, ...``: those labelled by ``w`` with ``inv(w) >= l``.

    Requires a rep whose basis labels are permutations (cyclic or projective modules).
    """
    lengths = [w.inv() for w in rep.basis]
    top = max(lengths, default=0)
    return [[j for j, ln in enumerate(lengths) if ln >= l] for l in range(top + 2)]

