"""
Exhaustive census of small non-degenerate symmetric solutions.

Candidates are n-tuples (g_1, ..., g_n) of permutations.  Involutivity
forces f_y(x) = g_{g_x(y)}^{-1}(x), so each tuple determines at most one
solution.  The candidate array is filtered with numpy (bijective f,
involutivity, first coordinate of the braid relation) and every survivor
is then re-checked with :func:`validate`.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NTooLarge
from .solution import (
    Permutation,
    YbeSolution,
    dumps_solution,
    from_gf_tables,
    validate,
)

__all__ = [
    "MAX_N",
    "SolutionCensus",
    "enumerate_solutions",
    "candidate_solutions",
    "canonicalize_iso",
    "iso_key",
    "solution_hash",
]

MAX_N = 4


@dataclass(frozen=True)
class SolutionCensus:
    n: int
    solutions: tuple[YbeSolution, ...]
    up_to_iso: bool

    def __len__(self) -> int:
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)


def iso_key(sol: YbeSolution) -> tuple[int, ...]:
    """Flattened g-table; f is determined by g for involutive solutions."""
    return tuple(v for row in sol.g_table for v in row)


def _candidate_arrays(n: int):
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int8)
    m = len(perms)
    idx = np.array(list(itertools.product(range(m), repeat=n)), dtype=np.int32)
    G = perms[idx]  # G[c, x, y] = g_x(y), 0-based
    Ginv = np.argsort(G, axis=2).astype(np.int8)
    c = np.arange(len(G))[:, None, None]
    xs = np.arange(n)[None, :, None]
    ys = np.arange(n)[None, None, :]
    U = G  # U[c, x, y] = g_x(y)
    # F[c, y, x] = f_y(x) = g_{g_x(y)}^{-1}(x)
    Fxy = Ginv[c, U, xs]  # indexed [c, x, y]
    F = np.swapaxes(Fxy, 1, 2)
    return G, F


def candidate_solutions(n: int) -> list[YbeSolution]:
    """
    Every g-tuple whose derived f table is bijective, before the
    involutivity and braid filters.  Used as a test corpus of
    non-degenerate maps, braided or not.
    """
    if not 1 <= n <= MAX_N:
        raise NTooLarge(f"n must be in 1..{MAX_N}, got {n}")
    G, F = _candidate_arrays(n)
    ok = (np.sort(F, axis=2) == np.arange(n)).all(axis=(1, 2))
    return [
        from_gf_tables(n, (G[k] + 1).tolist(), (F[k] + 1).tolist())
        for k in np.flatnonzero(ok)
    ]


@lru_cache(maxsize=None)
def _raw_census(n: int) -> tuple[YbeSolution, ...]:
    G, F = _candidate_arrays(n)
    ok = (np.sort(F, axis=2) == np.arange(n)).all(axis=(1, 2))
    c = np.arange(len(G))[:, None, None]
    xs = np.arange(n)[None, :, None]
    ys = np.arange(n)[None, None, :]
    U = G
    V = np.swapaxes(F, 1, 2)  # V[c, x, y] = f_y(x)
    # second coordinate of S(S(x, y)) must be y: f_v(u) == y
    ok &= (F[c, V, U] == ys).all(axis=(1, 2))
    # first coordinate of the braid relation: g_x g_y = g_{g_x(y)} g_{f_y(x)}
    for z in range(n):
        lhs = G[c, xs, G[:, :, z][:, None, :]]
        rhs = G[c, U, G[c, V, z]]
        ok &= (lhs == rhs).all(axis=(1, 2))
    out = []
    for k in np.flatnonzero(ok):
        sol = from_gf_tables(n, (G[k] + 1).tolist(), (F[k] + 1).tolist())
        if validate(sol).ok:
            out.append(sol)
    out.sort(key=iso_key)
    return tuple(out)


def canonicalize_iso(sol: YbeSolution) -> YbeSolution:
    """Least relabeling of ``sol`` (by :func:`iso_key`) over all n! atom permutations."""
    best = None
    for images in itertools.permutations(sol.atoms):
        cand = sol.relabel(Permutation(images))
        if best is None or iso_key(cand) < iso_key(best):
            best = cand
    return best


def enumerate_solutions(n: int, up_to_iso: bool = True) -> SolutionCensus:
    if not 1 <= n <= MAX_N:
        raise NTooLarge(f"n must be in 1..{MAX_N}, got {n}")
    raw = _raw_census(n)
    if not up_to_iso:
        return SolutionCensus(n, raw, False)
    canon = {iso_key(c): c for c in map(canonicalize_iso, raw)}
    return SolutionCensus(n, tuple(canon[k] for k in sorted(canon)), True)


def solution_hash(sol: YbeSolution) -> str:
    """Short content hash of the canonical relabeling."""
    text = dumps_solution(canonicalize_iso(sol))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]
