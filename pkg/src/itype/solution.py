"""
Finite set-theoretic solutions of the Yang-Baxter equation.

A solution on X = {1, ..., n} is a map S: X x X -> X x X written

    S(x, y) = (g_x(y), f_y(x)).

Atoms are 1-based everywhere so that printed data can be compared with
the usual x_1, ..., x_n notation.  A :class:`YbeSolution` stores the
S-table; the g and f tables are derived from it.  Solutions built with
:func:`from_gf_tables` are non-degenerate by construction, while
:func:`from_s_table` accepts any map so that :func:`validate` can
diagnose broken input.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    DegenerateSolution,
    FrozenUniquenessViolated,
    SolutionFormatError,
)

__all__ = [
    "Permutation",
    "YbeSolution",
    "FrozenPair",
    "ItypePresentation",
    "ValidationReport",
    "from_gf_tables",
    "from_s_table",
    "from_relations",
    "trivial_solution",
    "validate",
    "r_matrix_qybe_check",
    "frozen_pairs",
    "frozen_partner",
    "property_c",
    "property_c_violation",
    "presentation",
    "loads_solution",
    "dumps_solution",
    "read_solution",
    "write_solution",
]

Pair = tuple[int, int]


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i - 1]`` is the image of ``i``."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise SolutionFormatError(f"not a bijection on 1..{n}: {list(self.images)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        images = list(range(1, n + 1))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p * q)(i) = p(q(i))
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, start=1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
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


@dataclass(frozen=True)
class FrozenPair:
    x: int
    y: int

    @property
    def word(self) -> tuple[int, int]:
        return (self.x, self.y)


@dataclass(frozen=True)
class ItypePresentation:
    """Quadratic monoid presentation; each relation is a pair of two-letter words."""

    n: int
    relations: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def words(self) -> list[tuple[int, int]]:
        return [w for rel in self.relations for w in rel]

    def is_itype(self) -> bool:
        words = self.words()
        return (
            len(self.relations) == self.n * (self.n - 1) // 2
            and len(words) == len(set(words))
        )

    def __str__(self) -> str:
        def fmt(w):
            return "".join(f"x{a}" for a in w)

        return "; ".join(f"{fmt(a)}={fmt(b)}" for a, b in self.relations)


@dataclass(frozen=True)
class YbeSolution:
    """
    A candidate solution, stored as its S-table.

    ``s_table[x - 1][y - 1] == S(x, y)``.  Nothing here checks the
    Yang-Baxter axioms; use :func:`validate`.
    """

    n: int
    s_table: tuple[tuple[Pair, ...], ...] = field(repr=False)

    def S(self, x: int, y: int) -> Pair:
        return self.s_table[x - 1][y - 1]

    @cached_property
    def g_table(self) -> tuple[tuple[int, ...], ...]:
        """Row x is the image sequence of g_x (may be non-injective)."""
        return tuple(
            tuple(self.s_table[x][y][0] for y in range(self.n)) for x in range(self.n)
        )

    @cached_property
    def f_table(self) -> tuple[tuple[int, ...], ...]:
        """Row y is the image sequence of f_y (may be non-injective)."""
        return tuple(
            tuple(self.s_table[x][y][1] for x in range(self.n)) for y in range(self.n)
        )

    @cached_property
    def g(self) -> tuple[Permutation, ...]:
        try:
            return tuple(Permutation(row) for row in self.g_table)
        except SolutionFormatError as exc:
            raise DegenerateSolution(f"some g_x is not bijective: {exc}") from None

    @cached_property
    def f(self) -> tuple[Permutation, ...]:
        try:
            return tuple(Permutation(row) for row in self.f_table)
        except SolutionFormatError as exc:
            raise DegenerateSolution(f"some f_y is not bijective: {exc}") from None

    def gx(self, x: int) -> Permutation:
        return self.g[x - 1]

    def fx(self, x: int) -> Permutation:
        return self.f[x - 1]

    @property
    def atoms(self) -> range:
        return range(1, self.n + 1)

    def is_trivial(self) -> bool:
        return all(self.S(x, y) == (y, x) for x in self.atoms for y in self.atoms)

    def relabel(self, sigma: Permutation) -> "YbeSolution":
        """Transport S along sigma: S'(sigma x, sigma y) = (sigma x sigma)(S(x, y))."""
        table = [[None] * self.n for _ in range(self.n)]
        for x in self.atoms:
            for y in self.atoms:
                u, v = self.S(x, y)
                table[sigma(x) - 1][sigma(y) - 1] = (sigma(u), sigma(v))
        return from_s_table(self.n, table)

    def __str__(self) -> str:
        try:
            g = " ".join(f"g{x}={p}" for x, p in enumerate(self.g, start=1))
            f = " ".join(f"f{x}={p}" for x, p in enumerate(self.f, start=1))
            return f"YbeSolution(n={self.n}; {g}; {f})"
        except DegenerateSolution:
            return f"YbeSolution(n={self.n}, degenerate)"


def _as_permutation(n: int, p, where: str) -> Permutation:
    if isinstance(p, Permutation):
        images = p.images
    else:
        images = tuple(p)
    if len(images) != n:
        raise SolutionFormatError(f"{where}: expected {n} images, got {len(images)}")
    for k, v in enumerate(images):
        if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= n:
            raise SolutionFormatError(f"{where}[{k}]: image {v!r} out of range 1..{n}")
    seen = set()
    for k, v in enumerate(images):
        if v in seen:
            raise SolutionFormatError(f"{where}[{k}]: duplicate image {v}")
        seen.add(v)
    return Permutation(images)


def from_gf_tables(n: int, g: Sequence, f: Sequence) -> YbeSolution:
    """
    Build S(x, y) = (g_x(y), f_y(x)) from the two families of permutations.

    Entries of ``g`` and ``f`` may be :class:`Permutation` objects or
    plain image sequences.  Only bijectivity and dimensions are checked.
    """
    if n < 1:
        raise SolutionFormatError(f"n must be positive, got {n}")
    if len(g) != n or len(f) != n:
        raise SolutionFormatError(f"expected {n} g and f rows, got {len(g)} and {len(f)}")
    gp = [_as_permutation(n, p, f"g[{i}]") for i, p in enumerate(g)]
    fp = [_as_permutation(n, p, f"f[{i}]") for i, p in enumerate(f)]
    table = tuple(
        tuple((gp[x - 1](y), fp[y - 1](x)) for y in range(1, n + 1))
        for x in range(1, n + 1)
    )
    return YbeSolution(n, table)


def from_s_table(n: int, table) -> YbeSolution:
    """Wrap an arbitrary map X x X -> X x X given as an n x n table of pairs."""
    if len(table) != n or any(len(row) != n for row in table):
        raise SolutionFormatError(f"S-table must be {n}x{n}")
    out = []
    for x, row in enumerate(table, start=1):
        r = []
        for y, pair in enumerate(row, start=1):
            u, v = pair
            if not (1 <= u <= n and 1 <= v <= n):
                raise SolutionFormatError(f"S({x},{y}) = {pair} out of range")
            r.append((int(u), int(v)))
        out.append(tuple(r))
    return YbeSolution(n, tuple(out))


def trivial_solution(n: int) -> YbeSolution:
    """S(x, y) = (y, x): every g_x and f_x is the identity."""
    ident = [Permutation.identity(n)] * n
    return from_gf_tables(n, ident, ident)


@dataclass
class ValidationReport:
    nondegenerate: bool
    involutive: bool
    braided: bool
    # first failing atom (degenerate row), pair, or triple per axiom
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.nondegenerate and self.involutive and self.braided

    def as_dict(self) -> dict:
        return {
            "nondegenerate": self.nondegenerate,
            "involutive": self.involutive,
            "braided": self.braided,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
        }


def _braid_sides(sol: YbeSolution, x: int, y: int, z: int) -> tuple[tuple, tuple]:
    S = sol.S

    def s12(t):
        a, b = S(t[0], t[1])
        return (a, b, t[2])

    def s23(t):
        b, c = S(t[1], t[2])
        return (t[0], b, c)

    t = (x, y, z)
    return s12(s23(s12(t))), s23(s12(s23(t)))


def validate(sol: YbeSolution) -> ValidationReport:
    """Check non-degeneracy, involutivity and the braid relation, recording one witness each."""
    n = sol.n
    atoms = range(1, n + 1)
    witnesses: dict[str, tuple] = {}

    nondeg = True
    for x in atoms:
        if len(set(sol.g_table[x - 1])) != n:
            nondeg = False
            witnesses["nondegenerate"] = ("g", x)
            break
        if len(set(sol.f_table[x - 1])) != n:
            nondeg = False
            witnesses["nondegenerate"] = ("f", x)
            break

    involutive = True
    for x, y in itertools.product(atoms, repeat=2):
        if sol.S(*sol.S(x, y)) != (x, y):
            involutive = False
            witnesses["involutive"] = (x, y)
            break

    braided = True
    for t in itertools.product(atoms, repeat=3):
        lhs, rhs = _braid_sides(sol, *t)
        if lhs != rhs:
            braided = False
            witnesses["braided"] = t
            break

    return ValidationReport(nondeg, involutive, braided, witnesses)


def r_matrix_qybe_check(sol: YbeSolution) -> bool:
    """
    Check R^12 R^13 R^23 = R^23 R^13 R^12 on X^3 for R = alpha o S.

    Composition applies the rightmost factor first.
    """
    S = sol.S

    def R(a, b):
        u, v = S(a, b)
        return v, u

    def r12(t):
        a, b = R(t[0], t[1])
        return (a, b, t[2])

    def r13(t):
        a, c = R(t[0], t[2])
        return (a, t[1], c)

    def r23(t):
        b, c = R(t[1], t[2])
        return (t[0], b, c)

    for t in itertools.product(sol.atoms, repeat=3):
        if r12(r13(r23(t))) != r23(r13(r12(t))):
            return False
    return True


def frozen_pairs(sol: YbeSolution) -> list[FrozenPair]:
    """The n pairs with S(x, y) = (x, y), sorted by first coordinate."""
    pairs = []
    for x in sol.atoms:
        ys = [y for y in sol.atoms if sol.S(x, y) == (x, y)]
        if len(ys) != 1:
            raise FrozenUniquenessViolated(f"atom {x} has frozen partners {ys}")
        pairs.append(FrozenPair(x, ys[0]))
    seconds = sorted(p.y for p in pairs)
    if seconds != list(sol.atoms):
        raise FrozenUniquenessViolated(f"second coordinates {seconds} are not a bijection")
    return pairs


def frozen_partner(sol: YbeSolution, x: int) -> int:
    return frozen_pairs(sol)[x - 1].y


def property_c_violation(sol: YbeSolution) -> Optional[FrozenPair]:
    """First frozen pair for which g_x g_y or f_y f_x is not the identity, else None."""
    for p in frozen_pairs(sol):
        if not (sol.gx(p.x) * sol.gx(p.y)).is_identity():
            return p
        if not (sol.fx(p.y) * sol.fx(p.x)).is_identity():
            return p
    return None


def property_c(sol: YbeSolution) -> bool:
    return property_c_violation(sol) is None


def presentation(sol: YbeSolution) -> ItypePresentation:
    """
    The defining relations xy = g_x(y) f_y(x) for non-fixed pairs.

    A relation and its mirror are the same relation; each is stored with
    its two sides in lexicographic order, and the list is sorted.
    """
    rels = set()
    for x, y in itertools.product(sol.atoms, repeat=2):
        s = sol.S(x, y)
        if s != (x, y):
            rels.add(tuple(sorted([(x, y), s])))
    return ItypePresentation(sol.n, tuple(sorted(rels)))


# -- file format ------------------------------------------------------------


def loads_solution(text: str) -> YbeSolution:
    """Parse the JSON solution format ``{"n": int, "g": [[...]], "f": [[...]]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SolutionFormatError(f"line {exc.lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(data, dict):
        raise SolutionFormatError("top level must be an object")
    missing = [k for k in ("n", "g", "f") if k not in data]
    if missing:
        raise SolutionFormatError(f"missing field(s): {', '.join(missing)}")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise SolutionFormatError(f"n: expected positive integer, got {n!r}")
    for key in ("g", "f"):
        rows = data[key]
        if not isinstance(rows, list) or len(rows) != n:
            raise SolutionFormatError(f"{key}: expected a list of {n} rows")
        for i, row in enumerate(rows):
            if not isinstance(row, list):
                raise SolutionFormatError(f"{key}[{i}]: expected a list")
    return from_gf_tables(n, data["g"], data["f"])


def dumps_solution(sol: YbeSolution) -> str:
    """Canonical text form; ``loads_solution(dumps_solution(s)) == s``."""

    def rows(perms):
        return ",\n".join("    " + json.dumps(list(p.images)) for p in perms)

    return (
        "{\n"
        f'  "n": {sol.n},\n'
        f'  "g": [\n{rows(sol.g)}\n  ],\n'
        f'  "f": [\n{rows(sol.f)}\n  ]\n'
        "}\n"
    )


def read_solution(path) -> YbeSolution:
    with open(path, encoding="utf-8") as fh:
        return loads_solution(fh.read())


def write_solution(sol: YbeSolution, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_solution(sol))


def from_relations(n: int, relations) -> YbeSolution:
    """
    Rebuild S from quadratic relations xy = zt: S swaps the two sides of
    each relation and fixes every two-letter word that appears in none.
    """
    table = [[(x, y) for y in range(1, n + 1)] for x in range(1, n + 1)]
    for lhs, rhs in relations:
        lhs, rhs = tuple(lhs), tuple(rhs)
        if len(lhs) != 2 or len(rhs) != 2:
            raise SolutionFormatError(f"relation {lhs}={rhs} is not quadratic")
        for a, b in ((lhs, rhs), (rhs, lhs)):
            if table[a[0] - 1][a[1] - 1] != a:
                raise SolutionFormatError(f"word {a} appears in two relations")
            table[a[0] - 1][a[1] - 1] = b
    return from_s_table(n, table)
