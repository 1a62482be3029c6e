"""
Checks on the finite quotient W(X, S) and invariants of finite groups.

Factor sets, balancedness and the generated-monoid presentation work on
any :class:`FiniteGroupTable`; the remaining checks tie the table of
W(X, S) back to the monoid M(X, S).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Optional, Union

from sympy import factorint

from .errors import EquivalenceViolated, PropertyCViolated
from .monoid import (
    FrozenVector,
    all_simples,
    delta,
    equivalent_words,
    frozen_decomposition,
    frozen_words,
    words_equal,
)
from .signed import (
    FiniteGroupTable,
    SignedPermutation,
    closure,
    group_closure,
    neg_count,
    psi_of_atom,
    psi_of_word,
)
from .solution import YbeSolution, frozen_pairs, presentation, property_c

__all__ = [
    "FactorSets",
    "GeneratedMonoidPresentation",
    "GroupInvariants",
    "cyclic_group_table",
    "x_factor_sets",
    "is_x_balanced",
    "psi_delta_index",
    "simple_images",
    "divisor_image_check",
    "lattice_check",
    "generated_monoid_presentation",
    "atom_relations",
    "generating_group_verification",
    "section_equivalence_check",
    "kernel_ball_check",
    "frozen_kernel_rank_check",
    "w0_properties_check",
    "exchange_check",
    "presentation_order_check",
    "center",
    "center_generators",
    "lower_central_series",
    "nilpotency_class",
    "abelian_invariants",
    "group_invariants",
    "factorization",
]


@dataclass(frozen=True)
class FactorSets:
    left: frozenset[int]
    right: frozenset[int]

    @property
    def balanced(self) -> bool:
        return self.left == self.right


@dataclass(frozen=True)
class GeneratedMonoidPresentation:
    generators: tuple[int, ...]
    relations: tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class GroupInvariants:
    order: int
    center_order: int
    exponent: int
    nilpotency_class: Union[int, str]
    is_abelian: bool


def cyclic_group_table(order: int, generators) -> FiniteGroupTable:
    """Z/order with the given residues as generators (toy examples)."""
    return closure(0, [g % order for g in generators], lambda a, b: (a + b) % order)


# -- factor sets ------------------------------------------------------------


def x_factor_sets(W: FiniteGroupTable, w0: int) -> FactorSets:
    L = W.length_of
    target = L[w0]
    left, right = set(), set()
    for v in range(len(W)):
        vi = W.inverse(v)
        if L[v] + L[W.mul(vi, w0)] == target:
            left.add(v)
        if L[W.mul(w0, vi)] + L[v] == target:
            right.add(v)
    return FactorSets(frozenset(left), frozenset(right))


def is_x_balanced(W: FiniteGroupTable, w0: int) -> bool:
    return x_factor_sets(W, w0).balanced


def psi_delta_index(sol: YbeSolution, W: Optional[FiniteGroupTable] = None) -> int:
    W = W or group_closure(sol)
    return W.index[psi_of_word(sol, delta(sol).canonical_word)]


def simple_images(sol: YbeSolution, W: Optional[FiniteGroupTable] = None) -> list[int]:
    """Index in W of psi(s) for each simple s, in :func:`all_simples` order."""
    W = W or group_closure(sol)
    return [W.index[psi_of_word(sol, s.canonical_word)] for s in all_simples(sol)]


def divisor_image_check(sol: YbeSolution, W: Optional[FiniteGroupTable] = None) -> bool:
    W = W or group_closure(sol)
    fs = x_factor_sets(W, psi_delta_index(sol, W))
    images = frozenset(simple_images(sol, W))
    return fs.left == images and fs.right == images


def _order_matrix(fs: frozenset[int], W: FiniteGroupTable, side: str) -> dict:
    L = W.length_of
    leq = {}
    for u in fs:
        ui = W.inverse(u)
        for v in fs:
            if side == "left":
                leq[u, v] = L[u] + L[W.mul(ui, v)] == L[v]
            else:
                leq[u, v] = L[W.mul(v, ui)] + L[u] == L[v]
    return leq


def _is_lattice(elems: list[int], leq: dict) -> bool:
    for a, b in itertools.combinations_with_replacement(elems, 2):
        lower = [c for c in elems if leq[c, a] and leq[c, b]]
        if sum(1 for m in lower if all(leq[c, m] for c in lower)) != 1:
            return False
        upper = [c for c in elems if leq[a, c] and leq[b, c]]
        if sum(1 for m in upper if all(leq[m, c] for c in upper)) != 1:
            return False
    return True


def lattice_check(fs: FactorSets, W: FiniteGroupTable) -> bool:
    """Every pair in the factor set has a unique meet and join, for both factor orders."""
    elems = sorted(fs.left)
    return _is_lattice(elems, _order_matrix(fs.left, W, "left")) and _is_lattice(
        sorted(fs.right), _order_matrix(fs.right, W, "right")
    )


def generated_monoid_presentation(fs: FactorSets, W: FiniteGroupTable) -> GeneratedMonoidPresentation:
    """All triples (v, v', v'') in the factor set with v v' = v'' and additive lengths."""
    L = W.length_of
    gens = tuple(sorted(fs.left))
    members = set(gens)
    rels = []
    for v in gens:
        for v1 in gens:
            v2 = W.mul(v, v1)
            if v2 in members and L[v] + L[v1] == L[v2]:
                rels.append((v, v1, v2))
    return GeneratedMonoidPresentation(gens, tuple(rels))


def atom_relations(pres: GeneratedMonoidPresentation, W: FiniteGroupTable) -> set:
    """
    Eliminate non-atom generators and return the remaining relations.

    Each generator of length >= 2 is rewritten as a word in the atoms
    (generators of length 1) through its least defining triple; every
    triple then becomes a relation between atom words.  Atoms are named
    by their 1-based position in ``W.generators``.  Trivial relations are
    dropped and each relation is stored with its sides sorted.
    """
    L = W.length_of
    atom_name = {}
    for k, g in enumerate(W.gen_index, start=1):
        if g in pres.generators and L[g] == 1:
            atom_name.setdefault(g, k)
    defining: dict[int, tuple[int, int]] = {}
    for v, v1, v2 in sorted(pres.relations):
        if L[v] > 0 and L[v1] > 0 and v2 not in defining:
            defining[v2] = (v, v1)
    memo: dict[int, tuple[int, ...]] = {}

    def expand(v: int) -> tuple[int, ...]:
        if v in memo:
            return memo[v]
        if L[v] == 0:
            out: tuple[int, ...] = ()
        elif v in atom_name:
            out = (atom_name[v],)
        else:
            a, b = defining[v]
            out = expand(a) + expand(b)
        memo[v] = out
        return out

    rels = set()
    for v, v1, v2 in pres.relations:
        lhs, rhs = expand(v) + expand(v1), expand(v2)
        if lhs != rhs:
            rels.add(tuple(sorted((lhs, rhs))))
    return rels


# -- checks tying W back to the monoid --------------------------------------


def generating_group_verification(sol: YbeSolution) -> bool:
    """
    Injectivity of psi on simples, length preservation on simples, and
    balancedness of psi(Delta) with factor set psi(simples).
    """
    W = group_closure(sol)
    simples = all_simples(sol)
    images = simple_images(sol, W)
    injective = len(set(images)) == len(simples)
    lengths = all(W.length_of[i] == s.length for i, s in zip(images, simples))
    return injective and lengths and divisor_image_check(sol, W)


def section_equivalence_check(sol: YbeSolution) -> tuple[bool, bool]:
    """(psi(simples) is all of W, Property (C)); raises if they differ."""
    W = group_closure(sol)
    is_section = set(simple_images(sol, W)) == set(range(len(W)))
    has_c = property_c(sol)
    if is_section != has_c:
        raise EquivalenceViolated(f"is_section={is_section} but property_c={has_c} for {sol}")
    return is_section, has_c


def _require_c(sol: YbeSolution) -> None:
    if not property_c(sol):
        raise PropertyCViolated("solution does not satisfy Property (C)")


def kernel_ball_check(sol: YbeSolution, radius: int) -> bool:
    """For every word of length <= radius, psi_w = 1 iff its simple part is trivial."""
    _require_c(sol)
    for k in range(radius + 1):
        for w in itertools.product(sol.atoms, repeat=k):
            in_kernel = psi_of_word(sol, w).is_identity()
            _, simple = frozen_decomposition(sol, w)
            if in_kernel != (simple.length == 0):
                return False
    return True


def _vectors(n: int, degree: int):
    for d in range(degree + 1):
        for combo in itertools.combinations_with_replacement(range(n), d):
            exps = [0] * n
            for i in combo:
                exps[i] += 1
            yield FrozenVector(tuple(exps))


def frozen_kernel_rank_check(sol: YbeSolution, depth: int) -> bool:
    """
    Frozen products of total degree <= depth are pairwise distinct
    elements, lie in the kernel of psi, and commute with every frozen
    element.
    """
    _require_c(sol)
    thetas = frozen_words(sol)
    seen = set()
    for vec in _vectors(sol.n, depth):
        w = vec.word(sol)
        key = min(equivalent_words(sol, w))
        if key in seen:
            return False
        seen.add(key)
        if not psi_of_word(sol, w).is_identity():
            return False
        if vec.degree < depth:
            for t in thetas:
                if not words_equal(sol, w + t, t + w):
                    return False
    return True


def w0_properties_check(sol: YbeSolution) -> bool:
    _require_c(sol)
    W = group_closure(sol)
    w0 = psi_delta_index(sol, W)
    top = max(W.length_of)
    longest = [i for i, l in enumerate(W.length_of) if l == top]
    if top != sol.n or longest != [w0]:
        return False
    if W.mul(w0, w0) != 0:
        return False
    gens = set(W.gen_index)
    w0_inv = W.inverse(w0)
    return {W.mul(W.mul(w0, g), w0_inv) for g in gens} == gens


def exchange_check(sol: YbeSolution) -> bool:
    """
    l(psi_x w) = l(w) +- 1 for all w, x; on a descent, w = psi_x^-1 w1
    with psi_x^-1 a generator and l(w1) = l(w) - 1.
    """
    _require_c(sol)
    W = group_closure(sol)
    L = W.length_of
    gens = set(W.gen_index)
    for x in W.gen_index:
        x_inv = W.inverse(x)
        for w in range(len(W)):
            xw = W.mul(x, w)
            if abs(L[xw] - L[w]) != 1:
                return False
            if L[xw] == L[w] - 1:
                w1 = xw
                if x_inv not in gens or W.mul(x_inv, w1) != w or L[w1] != L[w] - 1:
                    return False
    return True


def presentation_order_check(sol: YbeSolution) -> bool:
    """
    Coset-enumerate the group on psi_1..psi_n with the quadratic
    relations and psi_x psi_y = 1 per frozen pair; compare with |W|.
    """
    from sympy.combinatorics.free_groups import free_group

    _require_c(sol)
    F, *gens = free_group(" ".join(f"x{i}" for i in sol.atoms))
    rels = []
    for lhs, rhs in presentation(sol).relations:
        rels.append(gens[lhs[0] - 1] * gens[lhs[1] - 1] * (gens[rhs[0] - 1] * gens[rhs[1] - 1]) ** -1)
    for p in frozen_pairs(sol):
        rels.append(gens[p.x - 1] * gens[p.y - 1])
    from sympy.combinatorics.fp_groups import FpGroup

    order = FpGroup(F, rels).order()
    W = group_closure(sol)
    return order == len(W) == 2**sol.n


# -- finite group invariants ------------------------------------------------


def _subgroup(W: FiniteGroupTable, gens) -> frozenset[int]:
    elems = {0}
    frontier = [0]
    gens = list(set(gens))
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = W.mul(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(elems)


def center(W: FiniteGroupTable) -> list[int]:
    return [
        z for z in range(len(W)) if all(W.mul(z, g) == W.mul(g, z) for g in W.gen_index)
    ]


def _default_key(W: FiniteGroupTable) -> Callable[[int], tuple]:
    if W.elements and isinstance(W.elements[0], SignedPermutation):
        return lambda i: (neg_count(W.elements[i]), str(W.elements[i]))
    return lambda i: (W.length_of[i], i)


def center_generators(W: FiniteGroupTable, key=None) -> list[int]:
    """Greedy generating set of the center, scanning elements in ``key`` order."""
    key = key or _default_key(W)
    chosen: list[int] = []
    span = frozenset({0})
    for z in sorted(center(W), key=key):
        if z not in span:
            chosen.append(z)
            span = _subgroup(W, chosen)
    return chosen


def _commutator(W: FiniteGroupTable, a: int, b: int) -> int:
    return W.mul(W.mul(W.inverse(a), W.inverse(b)), W.mul(a, b))


def lower_central_series(W: FiniteGroupTable) -> list[frozenset[int]]:
    """gamma_1 = W, gamma_{k+1} = [gamma_k, W]; stops when a term repeats."""
    series = [frozenset(range(len(W)))]
    while True:
        cur = series[-1]
        nxt = _subgroup(W, {_commutator(W, a, g) for a in cur for g in range(len(W))})
        if nxt == cur:
            return series
        series.append(nxt)
        if len(nxt) == 1:
            return series


def nilpotency_class(W: FiniteGroupTable) -> Union[int, str]:
    series = lower_central_series(W)
    if len(series[-1]) != 1:
        return "not nilpotent"
    return len(series) - 1


def factorization(m: int) -> dict[int, int]:
    return {int(p): int(e) for p, e in factorint(m).items()}


def abelian_invariants(W: FiniteGroupTable) -> list[int]:
    """
    Invariant factors d_1 | d_2 | ... of an abelian group, read off from
    the sizes of the subgroups {x : x^(p^k) = 1}.
    """
    if len(center(W)) != len(W):
        raise ValueError("group is not abelian")
    orders = [W.element_order(i) for i in range(len(W))]
    parts: dict[int, list[int]] = {}
    for p, e in factorization(len(W)).items():
        sizes = [1]
        k = 1
        while sizes[-1] < p**e:
            sizes.append(sum(1 for o in orders if (p**k) % o == 0))
            k += 1
        # number of cyclic p-factors of order >= p^k
        at_least = [round(math.log(sizes[k] // sizes[k - 1], p)) for k in range(1, len(sizes))]
        exps = []
        for k, cnt in enumerate(at_least, start=1):
            nxt = at_least[k] if k < len(at_least) else 0
            exps.extend([k] * (cnt - nxt))
        parts[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in parts.values()), default=0)
    factors = []
    for j in range(width):
        d = 1
        for p, exps in parts.items():
            if j < len(exps):
                d *= p ** exps[j]
        factors.append(d)
    return sorted(factors)


def group_invariants(W: FiniteGroupTable) -> GroupInvariants:
    z = center(W)
    exponent = 1
    for i in range(len(W)):
        exponent = math.lcm(exponent, W.element_order(i))
    return GroupInvariants(
        order=len(W),
        center_order=len(z),
        exponent=exponent,
        nilpotency_class=nilpotency_class(W),
        is_abelian=len(z) == len(W),
    )
