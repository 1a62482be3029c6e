"""
The permutation representation phi and its signed lift psi.

phi_x is the inverse of f_x.  psi_x agrees with phi_x except that it
negates the image of x itself, so psi_x is a signed permutation of
{+-1, ..., +-n}.  For a word, psi_{x1 x2 ... xk} = psi_x1 o psi_x2 o ... o psi_xk,
where ``o`` applies the right-hand factor first.  The image of psi is the
finite group W(X, S), enumerated here by breadth-first search.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Hashable, Sequence

from .errors import ClosureTooLarge
from .solution import Permutation, YbeSolution, presentation

__all__ = [
    "SignedPermutation",
    "FiniteGroupTable",
    "phi_of_atom",
    "phi_of_word",
    "psi_of_atom",
    "psi_of_word",
    "neg_count",
    "well_definedness_check",
    "group_closure",
    "closure",
    "parse_signed_cycles",
]


@dataclass(frozen=True)
class SignedPermutation:
    """k -> signs[k-1] * images[k-1] on basis vectors; extended by -k -> -image."""

    images: tuple[int, ...]
    signs: tuple[int, ...]

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)), (1,) * n)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        i = abs(k) - 1
        v = self.signs[i] * self.images[i]
        return v if k > 0 else -v

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        # (a * b)(k) = a(b(k))
        images, signs = [], []
        for j, s in zip(other.images, other.signs):
            images.append(self.images[j - 1])
            signs.append(s * self.signs[j - 1])
        return SignedPermutation(tuple(images), tuple(signs))

    def inverse(self) -> "SignedPermutation":
        images = [0] * self.n
        signs = [0] * self.n
        for k, (j, s) in enumerate(zip(self.images, self.signs), start=1):
            images[j - 1] = k
            signs[j - 1] = s
        return SignedPermutation(tuple(images), tuple(signs))

    def unsigned(self) -> Permutation:
        return Permutation(self.images)

    def is_identity(self) -> bool:
        return all(s == 1 for s in self.signs) and self.unsigned().is_identity()

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles on the 2n signed points, visited in the order 1, -1, 2, -2, ..."""
        seen = set()
        out = []
        for start in (p for k in range(1, self.n + 1) for p in (k, -k)):
            if start in seen or self(start) == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cycle.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cycle))
        return out

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_signed_cycles(n: int, text: str) -> SignedPermutation:
    """Inverse of ``str``: ``"(1,-1)(2,3,4)(-2,-3,-4)"`` on n points."""
    target = {k: k for k in range(1, n + 1)}
    for body in _CYCLE.findall(text.replace(" ", "")):
        if not body:
            continue
        pts = [int(t) for t in body.split(",")]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            if a > 0:
                target[a] = b
    images = tuple(abs(target[k]) for k in range(1, n + 1))
    signs = tuple(1 if target[k] > 0 else -1 for k in range(1, n + 1))
    return SignedPermutation(images, signs)


def phi_of_atom(sol: YbeSolution, x: int) -> Permutation:
    return sol.fx(x).inverse()


def phi_of_word(sol: YbeSolution, w: Sequence[int]) -> Permutation:
    out = Permutation.identity(sol.n)
    for x in w:
        out = out * phi_of_atom(sol, x)
    return out


@lru_cache(maxsize=64)
def _psi_atoms(sol: YbeSolution) -> tuple[SignedPermutation, ...]:
    out = []
    for x in sol.atoms:
        phi = phi_of_atom(sol, x)
        signs = tuple(-1 if y == x else 1 for y in sol.atoms)
        out.append(SignedPermutation(phi.images, signs))
    return tuple(out)


def psi_of_atom(sol: YbeSolution, x: int) -> SignedPermutation:
    return _psi_atoms(sol)[x - 1]


def psi_of_word(sol: YbeSolution, w: Sequence[int]) -> SignedPermutation:
    gens = _psi_atoms(sol)
    out = SignedPermutation.identity(sol.n)
    for x in w:
        out = out * gens[x - 1]
    return out


def neg_count(rho: SignedPermutation) -> int:
    """Number of basis vectors sent to a negative vector."""
    return sum(1 for s in rho.signs if s < 0)


def well_definedness_check(sol: YbeSolution) -> bool:
    """phi and psi agree on both sides of every defining relation."""
    for lhs, rhs in presentation(sol).relations:
        if phi_of_word(sol, lhs) != phi_of_word(sol, rhs):
            return False
        if psi_of_word(sol, lhs) != psi_of_word(sol, rhs):
            return False
    return True


class FiniteGroupTable:
    """
    A finite group enumerated from generators, with word lengths.

    Element 0 is the identity.  ``length_of[i]`` is the least number of
    generators (used positively) whose product is element i, and
    ``product[i][k]`` is the index of ``elements[i] * generators[k]``.
    """

    def __init__(self, elements, generators, product, length_of, mul):
        self.elements: list = elements
        self.generators: list = generators
        self.product: list[list[int]] = product
        self.length_of: list[int] = length_of
        self._mul = mul
        self.index: dict = {e: i for i, e in enumerate(elements)}
        self.gen_index: list[int] = [self.index[g] for g in generators]
        self._inverse: list[int] | None = None

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.index[self._mul(self.elements[i], self.elements[j])]

    def inverse(self, i: int) -> int:
        if self._inverse is None:
            inv = [0] * len(self)
            for a in range(len(self)):
                for b in range(len(self)):
                    if self.mul(a, b) == 0:
                        inv[a] = b
                        break
            self._inverse = inv
        return self._inverse[i]

    def power(self, i: int, k: int) -> int:
        out = 0
        for _ in range(k):
            out = self.mul(out, i)
        return out

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != 0:
            cur = self.mul(cur, i)
            k += 1
        return k

    def word_of(self, i: int) -> list[int]:
        """A geodesic word (generator positions, 0-based) for element i."""
        word = []
        while i != 0:
            for k, g in enumerate(self.gen_index):
                prev = self.mul(i, self.inverse(g))
                if self.length_of[prev] == self.length_of[i] - 1:
                    word.append(k)
                    i = prev
                    break
        return word[::-1]


def closure(
    identity: Hashable,
    generators: Sequence[Hashable],
    mul: Callable,
    bound: int = 10**7,
) -> FiniteGroupTable:
    """Breadth-first closure of ``generators`` under right multiplication."""
    elements = [identity]
    index = {identity: 0}
    length_of = [0]
    product: list[list[int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        row = []
        for g in generators:
            e = mul(elements[i], g)
            j = index.get(e)
            if j is None:
                j = len(elements)
                if j >= bound:
                    raise ClosureTooLarge(f"closure exceeds {bound} elements")
                index[e] = j
                elements.append(e)
                length_of.append(length_of[i] + 1)
                queue.append(j)
            row.append(j)
        while len(product) <= i:
            product.append([])
        product[i] = row
    return FiniteGroupTable(elements, list(generators), product, length_of, mul)


@lru_cache(maxsize=64)
def group_closure(sol: YbeSolution, bound: int = 10**7) -> FiniteGroupTable:
    """W(X, S) with generators psi_1, ..., psi_n."""
    return closure(
        SignedPermutation.identity(sol.n),
        _psi_atoms(sol),
        lambda a, b: a * b,
        bound,
    )
