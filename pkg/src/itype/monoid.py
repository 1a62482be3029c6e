"""
Words and elements of the I-type monoid M(X, S).

Elements are handled through their word classes: the defining relations
are homogeneous of degree two, so the set of words representing an
element is finite and is reached from any representative by repeatedly
replacing a factor ``xy`` with ``S(x, y)``.  Equality of elements is
membership in that closure.

Simple elements (divisors of the Garside element Delta) are in bijection
with subsets of atoms: the simple with left atom divisors ``A`` is the
right lcm of ``A``.  Frozen elements are the words ``xy`` with
``S(x, y) = (x, y)``; frozen element ``i`` is the one starting with atom
``i``.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import ClassTooLarge, PropertyCViolated
from .solution import YbeSolution, frozen_pairs, property_c

__all__ = [
    "Word",
    "SimpleElement",
    "FrozenVector",
    "DEFAULT_CLASS_BOUND",
    "parse_word",
    "format_word",
    "equivalent_words",
    "words_equal",
    "left_divisor_atoms",
    "right_divisor_atoms",
    "right_lcm_atoms",
    "left_lcm_atoms",
    "right_complement",
    "is_simple",
    "simple_of_word",
    "simple_from_subset",
    "all_simples",
    "delta",
    "atom_divisors",
    "count_representatives",
    "greedy_normal_form",
    "frozen_words",
    "frozen_conjugate",
    "frozen_conjugation_table",
    "frozen_decomposition",
    "frozen_commute_check",
]

Word = tuple[int, ...]

DEFAULT_CLASS_BOUND = 10**6


def parse_word(text: str) -> Word:
    """``"1 3 2"`` -> ``(1, 3, 2)``."""
    return tuple(int(t) for t in text.split())


def format_word(w: Sequence[int]) -> str:
    return " ".join(map(str, w))


@dataclass(frozen=True)
class SimpleElement:
    atoms_left: frozenset[int]
    atoms_right: frozenset[int]
    canonical_word: Word

    @property
    def length(self) -> int:
        return len(self.canonical_word)

    def as_dict(self) -> dict:
        return {
            "atoms_left": sorted(self.atoms_left),
            "canonical_word": format_word(self.canonical_word),
        }


@dataclass(frozen=True)
class FrozenVector:
    """Exponents (m_1, ..., m_n) of the frozen product theta_1^m_1 ... theta_n^m_n."""

    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def is_zero(self) -> bool:
        return not any(self.exponents)

    def word(self, sol: YbeSolution) -> Word:
        thetas = frozen_words(sol)
        out: list[int] = []
        for theta, m in zip(thetas, self.exponents):
            out.extend(theta * m)
        return tuple(out)


class _Monoid:
    """Per-solution rewriting data and closure cache."""

    def __init__(self, sol: YbeSolution):
        self.sol = sol
        self.rewrite: dict[tuple[int, int], tuple[int, int]] = {}
        for x in sol.atoms:
            for y in sol.atoms:
                s = sol.S(x, y)
                if s != (x, y):
                    self.rewrite[(x, y)] = s
        self.frozen = {p.word for p in frozen_pairs(sol)}
        self._classes: dict[Word, frozenset[Word]] = {}

    def closure(self, w: Word, bound: int) -> frozenset[Word]:
        w = tuple(w)
        cached = self._classes.get(w)
        if cached is not None:
            return cached
        seen = {w}
        queue = deque([w])
        rewrite = self.rewrite
        while queue:
            u = queue.popleft()
            for i in range(len(u) - 1):
                r = rewrite.get(u[i : i + 2])
                if r is None:
                    continue
                v = u[:i] + r + u[i + 2 :]
                if v not in seen:
                    seen.add(v)
                    if len(seen) > bound:
                        raise ClassTooLarge(f"class of {w} exceeds {bound} words")
                    queue.append(v)
        cls = frozenset(seen)
        if len(self._classes) > 2_000_000:
            self._classes.clear()
        for v in cls:
            self._classes[v] = cls
        return cls

    def has_frozen_factor(self, w: Word) -> bool:
        return any(w[i : i + 2] in self.frozen for i in range(len(w) - 1))


@lru_cache(maxsize=64)
def _monoid(sol: YbeSolution) -> _Monoid:
    return _Monoid(sol)


def equivalent_words(
    sol: YbeSolution, w: Sequence[int], bound: int = DEFAULT_CLASS_BOUND
) -> frozenset[Word]:
    """All words representing the same element as ``w``."""
    return _monoid(sol).closure(tuple(w), bound)


def words_equal(sol: YbeSolution, w1: Sequence[int], w2: Sequence[int]) -> bool:
    w1, w2 = tuple(w1), tuple(w2)
    if len(w1) != len(w2):
        return False
    if w1 == w2:
        return True
    return w2 in equivalent_words(sol, w1)


def left_divisor_atoms(sol: YbeSolution, w: Sequence[int]) -> frozenset[int]:
    return frozenset(u[0] for u in equivalent_words(sol, w) if u)


def right_divisor_atoms(sol: YbeSolution, w: Sequence[int]) -> frozenset[int]:
    return frozenset(u[-1] for u in equivalent_words(sol, w) if u)


def right_lcm_atoms(sol: YbeSolution, x: int, y: int) -> Word:
    """x if x == y, else the word xz with g_x(z) = y (equal to y t)."""
    if x == y:
        return (x,)
    z = sol.gx(x).inverse()(y)
    return (x, z)


def left_lcm_atoms(sol: YbeSolution, x: int, y: int) -> Word:
    """x if x == y, else phi_x(y) x, where phi_x is the inverse of f_x."""
    if x == y:
        return (x,)
    return (sol.fx(x).inverse()(y), x)


def right_complement(sol: YbeSolution, w: Sequence[int], x: int) -> Word:
    """
    The shortest word c with w.c = lcm(w, x) on the right.

    Computed by reversing x across the letters of w: past a letter equal
    to the current atom the complement vanishes, past a different letter
    u it becomes the z with u z = x t.  The result has length 0 or 1.
    """
    c: Optional[int] = x
    for u in w:
        if c is None:
            break
        if u == c:
            c = None
        else:
            c = sol.gx(u).inverse()(c)
    return () if c is None else (c,)


def is_simple(sol: YbeSolution, w: Sequence[int]) -> bool:
    if len(w) <= 1:
        return True
    m = _monoid(sol)
    return not any(m.has_frozen_factor(u) for u in equivalent_words(sol, w))


def simple_of_word(sol: YbeSolution, w: Sequence[int]) -> SimpleElement:
    """The :class:`SimpleElement` represented by ``w``; raises ValueError if ``w`` is not simple."""
    cls = equivalent_words(sol, w)
    m = _monoid(sol)
    if any(m.has_frozen_factor(u) for u in cls):
        raise ValueError(f"{format_word(w)} is not simple")
    return SimpleElement(
        frozenset(u[0] for u in cls if u),
        frozenset(u[-1] for u in cls if u),
        min(cls),
    )


def simple_from_subset(sol: YbeSolution, atoms: Iterable[int]) -> SimpleElement:
    """The right lcm of a set of atoms, built one atom at a time."""
    w: Word = ()
    for x in sorted(set(atoms)):
        w = w + right_complement(sol, w, x)
    return simple_of_word(sol, w)


@lru_cache(maxsize=64)
def all_simples(sol: YbeSolution) -> tuple[SimpleElement, ...]:
    """The 2^n simples ordered by size of their left atom set, then lexicographically."""
    out = []
    for k in range(sol.n + 1):
        for subset in itertools.combinations(sol.atoms, k):
            out.append(simple_from_subset(sol, subset))
    return tuple(out)


def delta(sol: YbeSolution) -> SimpleElement:
    return simple_from_subset(sol, sol.atoms)


def atom_divisors(sol: YbeSolution, s: SimpleElement) -> tuple[frozenset[int], frozenset[int]]:
    if not s.canonical_word:
        return frozenset(), frozenset()
    cls = equivalent_words(sol, s.canonical_word)
    return frozenset(u[0] for u in cls), frozenset(u[-1] for u in cls)


def count_representatives(sol: YbeSolution, s: SimpleElement) -> int:
    return len(equivalent_words(sol, s.canonical_word))


def greedy_normal_form(sol: YbeSolution, w: Sequence[int]) -> list[SimpleElement]:
    """
    Left-greedy decomposition of w into simples.

    The head of a nonempty element is the right lcm of its left atom
    divisors, i.e. its maximal simple left divisor.
    """
    w = tuple(w)
    if not w:
        return [SimpleElement(frozenset(), frozenset(), ())]
    factors = []
    while w:
        cls = equivalent_words(sol, w)
        head = simple_from_subset(sol, {u[0] for u in cls})
        k = head.length
        prefix = head.canonical_word
        w = min(u[k:] for u in cls if u[:k] == prefix)
        factors.append(head)
    return factors


# -- frozen elements --------------------------------------------------------


@lru_cache(maxsize=64)
def frozen_words(sol: YbeSolution) -> tuple[Word, ...]:
    """theta_i as a two-letter word, for i = 1..n."""
    return tuple(p.word for p in frozen_pairs(sol))


def _require_c(sol: YbeSolution) -> None:
    if not property_c(sol):
        raise PropertyCViolated("solution does not satisfy Property (C)")


def frozen_conjugate(sol: YbeSolution, z: int, i: int) -> int:
    """The j with theta_i . z = z . theta_j."""
    _require_c(sol)
    return frozen_conjugation_table(sol)[z - 1][i - 1]


@lru_cache(maxsize=64)
def frozen_conjugation_table(sol: YbeSolution) -> tuple[tuple[int, ...], ...]:
    """Row z, column i holds j with theta_i z = z theta_j."""
    _require_c(sol)
    thetas = frozen_words(sol)
    frozen = set(thetas)
    rows = []
    for z in sol.atoms:
        row = []
        for theta in thetas:
            hits = {
                u[1]
                for u in equivalent_words(sol, theta + (z,))
                if u[0] == z and u[1:] in frozen
            }
            if len(hits) != 1:
                raise PropertyCViolated(f"theta {theta} does not pass atom {z}: {hits}")
            row.append(hits.pop())
        rows.append(tuple(row))
    return tuple(rows)


def frozen_decomposition(sol: YbeSolution, w: Sequence[int]) -> tuple[FrozenVector, SimpleElement]:
    """
    Split w as (frozen product) . (simple).

    While some representative contains a frozen factor, take the
    lexicographically least such representative, cut out its leftmost
    frozen factor and carry it to the front across the letters before it.
    """
    _require_c(sol)
    table = frozen_conjugation_table(sol)
    m = _monoid(sol)
    thetas = frozen_words(sol)
    index = {t: i for i, t in enumerate(thetas, start=1)}
    # inverse[z][j] = i with theta_i z = z theta_j
    inverse = [{j: i for i, j in enumerate(row, start=1)} for row in table]
    exps = [0] * sol.n
    cur = tuple(w)
    while True:
        hits = [u for u in equivalent_words(sol, cur) if m.has_frozen_factor(u)]
        if not hits:
            break
        u = min(hits)
        p = next(i for i in range(len(u) - 1) if u[i : i + 2] in m.frozen)
        k = index[u[p : p + 2]]
        for z in reversed(u[:p]):
            k = inverse[z - 1][k]
        exps[k - 1] += 1
        cur = u[:p] + u[p + 2 :]
    return FrozenVector(tuple(exps)), simple_of_word(sol, cur)


def _is_lcm_of(sol: YbeSolution, c: Word, a: Word, b: Word, side: str) -> bool:
    """True iff no proper divisor of c (on the given side) is a common multiple of a and b."""
    cls = equivalent_words(sol, c)
    for k in range(max(len(a), len(b)), len(c)):
        if side == "right":
            cands = {u[:k] for u in cls}
        else:
            cands = {u[len(c) - k :] for u in cls}
        for p in cands:
            pc = equivalent_words(sol, p)
            if side == "right":
                ok = any(v[: len(a)] == a for v in pc) and any(v[: len(b)] == b for v in pc)
            else:
                ok = any(v[-len(a) :] == a for v in pc) and any(v[-len(b) :] == b for v in pc)
            if ok:
                return False
    return True


def frozen_commute_check(sol: YbeSolution) -> bool:
    """Frozen elements commute pairwise, and theta_i theta_j is both their right and left lcm."""
    _require_c(sol)
    thetas = frozen_words(sol)
    for a, b in itertools.combinations(thetas, 2):
        c = a + b
        if not words_equal(sol, c, b + a):
            return False
        if not (_is_lcm_of(sol, c, a, b, "right") and _is_lcm_of(sol, c, a, b, "left")):
            return False
    return True
