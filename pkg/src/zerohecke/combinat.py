"""
Compositions, weak compositions, permutations and multichains in the Boolean
algebra B_n, together with the two encodings of a multichain:

* ``(alpha(M), sigma(M))``: a weak composition and a minimal coset
  representative, printed in bar form such as ``2||14|3|``;
* ``p(M)``: the word recording where each integer first enters the chain.

Subsets of ``[n]`` are stored as bitmasks (bit ``i-1`` stands for ``i``).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MAX_N",
    "Composition",
    "WeakComposition",
    "Permutation",
    "Multichain",
    "PWord",
    "mask_of",
    "elements_of",
    "popcount",
    "compositions",
    "weak_compositions",
    "permutations",
    "multichains",
    "min_coset_reps",
    "longest_parabolic_element",
    "longest_min_coset_rep",
    "descent_class",
    "parse_composition",
    "parse_permutation",
    "parse_multichain",
]

MAX_N = 16


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_of(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        if e < 1:
            raise ValueError(f"subset elements must be positive, got {e}")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise ValueError(f"n must lie in [0, {MAX_N}], got {n}")


# ---------------------------------------------------------------------------
# compositions


@dataclass(frozen=True, order=True)
class Composition:
    """A composition of ``n``: a tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Composition":
        return cls(tuple(parts))

    @classmethod
    def from_descent_set(cls, descents: Iterable[int], n: int) -> "Composition":
        ds = sorted(set(descents))
        if ds and (ds[0] < 1 or ds[-1] > n - 1):
            raise ValueError(f"descent set {ds} not contained in [1, {n - 1}]")
        if n == 0:
            return cls(())
        cuts = [0, *ds, n]
        return cls(tuple(b - a for a, b in zip(cuts, cuts[1:])))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def descent_set(self) -> frozenset[int]:
        return frozenset(itertools.accumulate(self.parts[:-1]))

    def maj(self) -> int:
        return sum(self.descent_set())

    def des(self) -> int:
        return max(len(self.parts) - 1, 0)

    def complement(self) -> "Composition":
        n = self.n
        return Composition.from_descent_set(set(range(1, n)) - self.descent_set(), n)

    def reverse(self) -> "Composition":
        return Composition(self.parts[::-1])

    def transpose(self) -> "Composition":
        # reverse of the complement (the transposed ribbon)
        return self.complement().reverse()

    def refines(self, other: "Composition") -> bool:
        """True iff ``self`` is coarser than ``other``: D(self) is inside D(other)."""
        return self.n == other.n and self.descent_set() <= other.descent_set()

    def concat(self, other: "Composition") -> "Composition":
        return Composition(self.parts + other.parts)

    def near_concat(self, other: "Composition") -> "Composition":
        if not self.parts or not other.parts:
            raise ValueError("near-concatenation needs two nonempty compositions")
        return Composition(self.parts[:-1] + (self.parts[-1] + other.parts[0],) + other.parts[1:])

    def coarsenings(self) -> Iterator["Composition"]:
        """All beta with D(beta) contained in D(self)."""
        ds = sorted(self.descent_set())
        for r in range(len(ds) + 1):
            for sub in itertools.combinations(ds, r):
                yield Composition.from_descent_set(sub, self.n)

    def binary_word(self) -> str:
        """``u_1...u_{n-1}`` with ``u_i = 1`` iff ``i`` is a descent."""
        ds = self.descent_set()
        return "".join("1" if i in ds else "0" for i in range(1, self.n))


def compositions(n: int) -> list[Composition]:
    """All compositions of ``n``, in order of their descent-set bitmask."""
    if n == 0:
        return [Composition(())]
    out = []
    for bits in range(1 << (n - 1)):
        out.append(Composition.from_descent_set(elements_of(bits), n))
    return out


@dataclass(frozen=True, order=True)
class WeakComposition:
    """A sequence of nonnegative integers; ``k`` is its length."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"weak composition parts must be nonnegative: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "WeakComposition":
        return cls(tuple(parts))

    @classmethod
    def from_descent_multiset(cls, ranks: Iterable[int], n: int) -> "WeakComposition":
        rs = sorted(ranks)
        if rs and (rs[0] < 0 or rs[-1] > n):
            raise ValueError(f"ranks {rs} not contained in [0, {n}]")
        cuts = [0, *rs, n]
        return cls(tuple(b - a for a, b in zip(cuts, cuts[1:])))

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def k(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def descent_multiset(self) -> tuple[int, ...]:
        """Sorted partial sums alpha_1, alpha_1+alpha_2, ..., with multiplicity."""
        return tuple(itertools.accumulate(self.parts[:-1]))

    def descent_set(self) -> frozenset[int]:
        """Underlying set of the descent multiset, restricted to ``[n-1]``."""
        n = self.n
        return frozenset(d for d in self.descent_multiset() if 0 < d < n)

    def underlying(self) -> Composition:
        return Composition(tuple(p for p in self.parts if p))


def weak_compositions(n: int, k: int) -> list[WeakComposition]:
    """Com(n, k): weak compositions of ``n`` with exactly ``k`` parts."""
    if k == 0:
        return [WeakComposition(())] if n == 0 else []
    out = []
    # stars and bars over the descent multiset
    for ranks in itertools.combinations_with_replacement(range(n + 1), k - 1):
        out.append(WeakComposition.from_descent_multiset(ranks, n))
    return out


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation in one-line notation ``(w(1), ..., w(n))``."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def of(cls, *images: int) -> "Permutation":
        return cls(tuple(images))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> "Permutation":
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def simple(cls, i: int, n: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __str__(self) -> str:
        return " ".join(map(str, self.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def descent_set(self) -> frozenset[int]:
        w = self.images
        return frozenset(i for i in range(1, self.n) if w[i - 1] > w[i])

    def des(self) -> int:
        return len(self.descent_set())

    def maj(self) -> int:
        return sum(self.descent_set())

    def inversion_set(self) -> set[tuple[int, int]]:
        w = self.images
        return {(i + 1, j + 1) for i, j in itertools.combinations(range(self.n), 2) if w[i] > w[j]}

    def inv(self) -> int:
        w = self.images
        return sum(1 for i, j in itertools.combinations(range(self.n), 2) if w[i] > w[j])

    length = inv

    def left_simple(self, i: int) -> "Permutation":
        """``s_i * w``: swap the values ``i`` and ``i+1``."""
        img = list(self.images)
        a, b = img.index(i), img.index(i + 1)
        img[a], img[b] = i + 1, i
        return Permutation(tuple(img))

    def right_simple(self, i: int) -> "Permutation":
        """``w * s_i``: swap the positions ``i`` and ``i+1``."""
        img = list(self.images)
        img[i - 1], img[i] = img[i], img[i - 1]
        return Permutation(tuple(img))

    def left_descents(self) -> frozenset[int]:
        """D(w^{-1}): the ``i`` with ``i+1`` appearing before ``i``."""
        pos = {v: p for p, v in enumerate(self.images)}
        return frozenset(i for i in range(1, self.n) if pos[i] > pos[i + 1])

    def reduced_word(self) -> list[int]:
        """A reduced word ``[i_1, ..., i_k]`` with ``w = s_{i_1} ... s_{i_k}``.

        Built greedily by stripping left descents.
        """
        word = []
        w = self
        while True:
            lds = w.left_descents()
            if not lds:
                return word
            i = min(lds)
            word.append(i)
            w = w.left_simple(i)

    def initial_set(self, i: int) -> int:
        """Bitmask of ``{w(1), ..., w(i)}``."""
        return mask_of(self.images[:i])


def permutations(n: int) -> list[Permutation]:
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


def min_coset_reps(alpha: Composition | WeakComposition) -> list[Permutation]:
    """S^alpha: permutations whose descent set lies in D(alpha)."""
    ds = alpha.descent_set()
    n = alpha.n
    # shuffle the blocks: choose which values land in each block, sort each block
    parts = [p for p in alpha.parts if p]
    out = []

    def rec(remaining: tuple[int, ...], idx: int, acc: list[int]):
        if idx == len(parts):
            out.append(Permutation(tuple(acc)))
            return
        for chosen in itertools.combinations(remaining, parts[idx]):
            rest = tuple(v for v in remaining if v not in chosen)
            rec(rest, idx + 1, acc + list(chosen))

    rec(tuple(range(1, n + 1)), 0, [])
    assert all(w.descent_set() <= ds for w in out)
    return sorted(out)


def descent_class(alpha: Composition) -> list[Permutation]:
    ds = alpha.descent_set()
    return [w for w in min_coset_reps(alpha) if w.descent_set() == ds]


def longest_parabolic_element(alpha: Composition) -> Permutation:
    """w_0(alpha): longest element of the parabolic subgroup of alpha^c.

    It reverses each block of the complement composition, so its descent set is D(alpha).
    """
    img: list[int] = []
    start = 1
    for part in alpha.complement().parts:
        img.extend(range(start + part - 1, start - 1, -1))
        start += part
    return Permutation(tuple(img))


def longest_min_coset_rep(alpha: Composition) -> Permutation:
    """w_1(alpha): the longest element of S^alpha."""
    img: list[int] = []
    top = alpha.n
    for part in alpha.parts:
        img.extend(range(top - part + 1, top + 1))
        top -= part
    return Permutation(tuple(img))


# ---------------------------------------------------------------------------
# multichains


@dataclass(frozen=True)
class Multichain:
    """A multichain ``A_1 <= ... <= A_k`` of subsets of ``[n]`` (as bitmasks).

    Entries are kept sorted by (cardinality, mask); ``A_0 = {}`` and
    ``A_{k+1} = [n]`` are implicit.
    """

    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        _check_n(self.n)
        full = (1 << self.n) - 1
        sets = tuple(sorted((int(s) for s in self.sets), key=lambda m: (popcount(m), m)))
        for s in sets:
            if s & ~full:
                raise ValueError(f"subset {elements_of(s)} not inside [{self.n}]")
        for a, b in zip(sets, sets[1:]):
            if a & ~b:
                raise ValueError(f"sets {elements_of(a)} and {elements_of(b)} are not nested")
        object.__setattr__(self, "sets", sets)

    @classmethod
    def from_lists(cls, lists: Sequence[Iterable[int]], n: int) -> "Multichain":
        return cls(n, tuple(mask_of(s) for s in lists))

    @classmethod
    def empty(cls, n: int) -> "Multichain":
        return cls(n, ())

    @property
    def k(self) -> int:
        return len(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def as_lists(self) -> list[list[int]]:
        return [elements_of(s) for s in self.sets]

    def ranks(self) -> tuple[int, ...]:
        """Rank multiset r(M), sorted."""
        return tuple(popcount(s) for s in self.sets)

    def sort_key(self) -> tuple:
        return (self.ranks(), self.sets)

    def weak_composition(self) -> WeakComposition:
        sizes = [0, *self.ranks(), self.n]
        return WeakComposition(tuple(b - a for a, b in zip(sizes, sizes[1:])))

    def sigma(self) -> Permutation:
        """Minimal permutation sending the standard multichain of the same ranks to M."""
        img: list[int] = []
        prev = 0
        for s in (*self.sets, (1 << self.n) - 1):
            img.extend(elements_of(s & ~prev))
            prev = s
        return Permutation(tuple(img))

    def encode(self) -> tuple[WeakComposition, Permutation]:
        return self.weak_composition(), self.sigma()

    @classmethod
    def decode(cls, alpha: WeakComposition, sigma: Permutation) -> "Multichain":
        if alpha.n != sigma.n:
            raise ValueError("size mismatch between weak composition and permutation")
        if not sigma.descent_set() <= alpha.descent_set():
            raise ValueError(f"{sigma} is not a minimal coset representative for {alpha}")
        sets = tuple(sigma.initial_set(r) for r in alpha.descent_multiset())
        return cls(sigma.n, sets)

    def pword(self) -> "PWord":
        k = self.k
        letters = []
        for i in range(self.n):
            bit = 1 << i
            p = next((j for j, s in enumerate(self.sets, 1) if s & bit), k + 1)
            letters.append(p)
        return PWord(tuple(letters), k)

    def apply_simple(self, i: int) -> "Multichain":
        """Relabel by the transposition ``(i, i+1)``."""
        lo, hi = 1 << (i - 1), 1 << i
        out = []
        for s in self.sets:
            a, b = bool(s & lo), bool(s & hi)
            s &= ~(lo | hi)
            if a:
                s |= hi
            if b:
                s |= lo
            out.append(s)
        return Multichain(self.n, tuple(out))

    def bar_form(self) -> str:
        if self.n > 9:
            raise ValueError("bar form only supports n <= 9")
        blocks = []
        prev = 0
        for s in (*self.sets, (1 << self.n) - 1):
            blocks.append("".join(map(str, elements_of(s & ~prev))))
            prev = s
        return "|".join(blocks)

    @classmethod
    def from_bar_form(cls, text: str) -> "Multichain":
        blocks = text.strip().split("|")
        seen: set[int] = set()
        sets = []
        acc = 0
        for block in blocks:
            if block and not block.isdigit():
                raise ValueError(f"malformed bar form {text!r}")
            digits = [int(c) for c in block]
            if digits != sorted(digits) or seen.intersection(digits):
                raise ValueError(f"malformed bar form {text!r}")
            seen.update(digits)
            acc |= mask_of(digits)
            sets.append(acc)
        n = len(seen)
        if seen != set(range(1, n + 1)):
            raise ValueError(f"bar form {text!r} does not list each of 1..n exactly once")
        return cls(n, tuple(sets[:-1]))

    def to_json(self) -> str:
        return json.dumps(self.as_lists())

    def __str__(self) -> str:
        return self.bar_form() if self.n <= 9 else json.dumps(self.as_lists())


@dataclass(frozen=True)
class PWord:
    """A word ``(p_1, ..., p_n)`` over ``[k+1]`` encoding a length-``k`` multichain."""

    letters: tuple[int, ...]
    k: int

    def __post_init__(self):
        letters = tuple(int(v) for v in self.letters)
        if any(not 1 <= v <= self.k + 1 for v in letters):
            raise ValueError(f"letters of {letters} must lie in [1, {self.k + 1}]")
        object.__setattr__(self, "letters", letters)

    @property
    def n(self) -> int:
        return len(self.letters)

    def inv(self) -> int:
        p = self.letters
        return sum(1 for i, j in itertools.combinations(range(self.n), 2) if p[i] > p[j])

    def descent_set(self) -> frozenset[int]:
        p = self.letters
        return frozenset(i for i in range(1, self.n) if p[i - 1] > p[i])

    def prime(self) -> tuple[int, ...]:
        """``p'_i = #{j : p_j <= i}`` for ``i = 1..k``."""
        return tuple(sum(1 for v in self.letters if v <= i) for i in range(1, self.k + 1))

    def decode(self) -> Multichain:
        sets = []
        for j in range(1, self.k + 1):
            sets.append(mask_of(i for i, v in enumerate(self.letters, 1) if v <= j))
        return Multichain(self.n, tuple(sets))


def multichains(n: int, k: int) -> Iterator[Multichain]:
    """All multichains of length ``k`` in B_n, via the word bijection with [k+1]^n."""
    for letters in itertools.product(range(1, k + 2), repeat=n):
        yield PWord(letters, k).decode()


# ---------------------------------------------------------------------------
# text forms


def parse_composition(text: str) -> Composition:
    text = text.strip().strip("[]()")
    if not text:
        return Composition(())
    try:
        parts = tuple(int(p) for p in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise ValueError(f"malformed composition {text!r}") from exc
    return Composition(parts)


def parse_permutation(text: str) -> Permutation:
    text = text.strip().strip("[]()").replace(",", " ")
    try:
        return Permutation(tuple(int(v) for v in text.split()))
    except ValueError as exc:
        raise ValueError(f"malformed permutation {text!r}") from exc


def parse_multichain(text: str, n: int | None = None) -> Multichain:
    """Bar form (``2||14|3|``) or a JSON list of sorted integer lists (needs ``n``)."""
    text = text.strip()
    if text.startswith("["):
        lists = json.loads(text)
        if n is None:
            raise ValueError("JSON multichains need the ambient n")
        return Multichain.from_lists(lists, n)
    return Multichain.from_bar_form(text)
