"""
The full invariant suite run by ``itype check``.

Each check returns ``(name, passed)``.  Checks that need Property (C)
are skipped (not reported) for solutions without it.  Random word
samples come from a seeded generator so runs are reproducible.
"""

from __future__ import annotations

import itertools
import math
import random
from typing import Iterator

from .analysis import (
    abelian_invariants,
    divisor_image_check,
    exchange_check,
    frozen_kernel_rank_check,
    generating_group_verification,
    group_invariants,
    is_x_balanced,
    kernel_ball_check,
    lattice_check,
    presentation_order_check,
    psi_delta_index,
    section_equivalence_check,
    simple_images,
    w0_properties_check,
    x_factor_sets,
)
from .errors import ItypeError
from .monoid import (
    all_simples,
    equivalent_words,
    frozen_commute_check,
    frozen_conjugation_table,
    frozen_decomposition,
    frozen_words,
    greedy_normal_form,
    right_divisor_atoms,
    words_equal,
)
from .signed import group_closure, neg_count, phi_of_word, psi_of_word, well_definedness_check
from .solution import (
    YbeSolution,
    frozen_pairs,
    from_gf_tables,
    presentation,
    property_c,
    r_matrix_qybe_check,
    validate,
)

__all__ = ["run_suite"]

MAX_BALL = 6
MAX_DEPTH = 4


def random_words(sol: YbeSolution, rng: random.Random, count: int, max_len: int):
    for _ in range(count):
        k = rng.randint(0, max_len)
        yield tuple(rng.choice(sol.atoms) for _ in range(k))


def _solution_checks(sol):
    rep = validate(sol)
    yield "validate", rep.ok
    yield "qybe_matches_braided", r_matrix_qybe_check(sol) == rep.braided
    if not rep.ok:
        return
    pairs = frozen_pairs(sol)
    yield "frozen_pairs_fixed", all(sol.S(p.x, p.y) == (p.x, p.y) for p in pairs)
    yield "gf_round_trip", from_gf_tables(sol.n, sol.g, sol.f) == sol
    yield "itype_presentation", presentation(sol).is_itype()


def _simple_checks(sol):
    simples = all_simples(sol)
    n = sol.n
    yield "simple_count", len(simples) == 2**n
    lengths = [s.length for s in simples]
    yield "simple_binomials", all(lengths.count(k) == math.comb(n, k) for k in range(n + 1))
    subsets = [frozenset(c) for k in range(n + 1) for c in itertools.combinations(sol.atoms, k)]
    yield "simple_left_atoms", [s.atoms_left for s in simples] == subsets
    yield "simple_side_sizes", all(
        len(s.atoms_left) == len(s.atoms_right) == s.length for s in simples
    )
    yield "simple_representatives", all(
        len(equivalent_words(sol, s.canonical_word)) == math.factorial(s.length) for s in simples
    )


def _psi_checks(sol, rng):
    yield "well_defined", well_definedness_check(sol)
    words = list(random_words(sol, rng, 60, 6))
    ok = True
    for w in words:
        rho = psi_of_word(sol, w)
        if rho.unsigned() != phi_of_word(sol, w):
            ok = False
        if any(psi_of_word(sol, u) != rho for u in equivalent_words(sol, w)):
            ok = False
    yield "psi_constant_on_classes", ok

    W = group_closure(sol)
    ok = True
    for w in words:
        rho = psi_of_word(sol, w)
        if not len(w) >= W.length_of[W.index[rho]] >= neg_count(rho):
            ok = False
    yield "length_bounds", ok

    ok = True
    for _ in range(1000):
        a = tuple(rng.choice(sol.atoms) for _ in range(rng.randint(0, 8)))
        b = tuple(rng.choice(sol.atoms) for _ in range(rng.randint(0, 8)))
        if neg_count(psi_of_word(sol, a + b)) > neg_count(psi_of_word(sol, a)) + neg_count(
            psi_of_word(sol, b)
        ):
            ok = False
            break
    yield "neg_count_submultiplicative", ok

    simples = all_simples(sol)
    ok = True
    for w in [s.canonical_word for s in simples] + words:
        rho = psi_of_word(sol, w)
        negated = {x for x in sol.atoms if rho.signs[x - 1] < 0}
        if not negated <= right_divisor_atoms(sol, w):
            ok = False
    yield "sign_drop_right_divides", ok

    ok = True
    for s in simples:
        rho = psi_of_word(sol, s.canonical_word)
        negated = frozenset(x for x in sol.atoms if rho.signs[x - 1] < 0)
        if negated != s.atoms_right or neg_count(rho) != s.length:
            ok = False
    yield "simple_sign_formula", ok
    yield "psi_injective_on_simples", len(set(simple_images(sol, W))) == len(simples)

    ok = True
    for w in words:
        factors = greedy_normal_form(sol, w)
        recomposed = tuple(x for f in factors for x in f.canonical_word)
        if not words_equal(sol, recomposed, w):
            ok = False
    yield "greedy_recomposition", ok


def _group_checks(sol):
    W = group_closure(sol)
    w0 = psi_delta_index(sol, W)
    fs = x_factor_sets(W, w0)
    yield "generating_group", generating_group_verification(sol)
    yield "divisor_image", divisor_image_check(sol, W)
    yield "balanced", is_x_balanced(W, w0)
    yield "lattice", lattice_check(fs, W)
    try:
        is_section, has_c = section_equivalence_check(sol)
        yield "section_iff_property_c", True
    except ItypeError:
        yield "section_iff_property_c", False
        return
    n = sol.n
    images = set(simple_images(sol, W))
    if has_c:
        yield "order_2^n", len(W) == 2**n
    else:
        yield "order_exceeds_simples", len(W) > len(images) == 2**n
    if sol.is_trivial():
        yield "trivial_is_elementary_abelian", abelian_invariants(W) == [2] * n


def _frozen_checks(sol, ball, depth):
    table = frozen_conjugation_table(sol)
    yield "frozen_conjugation_bijective", all(sorted(row) == list(sol.atoms) for row in table)
    yield "frozen_commute_lcm", frozen_commute_check(sol)
    yield "kernel_ball", kernel_ball_check(sol, ball)
    yield "frozen_free_to_depth", frozen_kernel_rank_check(sol, depth)
    yield "frozen_words_in_kernel", all(
        psi_of_word(sol, t).is_identity() for t in frozen_words(sol)
    )
    ok = True
    for k in range(min(ball, 5) + 1):
        for w in itertools.product(sol.atoms, repeat=k):
            vec, simple = frozen_decomposition(sol, w)
            if not words_equal(sol, vec.word(sol) + simple.canonical_word, w):
                ok = False
                break
        if not ok:
            break
    yield "frozen_decomposition_recomposes", ok
    yield "w0_properties", w0_properties_check(sol)
    yield "exchange", exchange_check(sol)
    yield "presentation_order", presentation_order_check(sol)
    W = group_closure(sol)
    cls = group_invariants(W).nilpotency_class
    yield "nilpotency_class_bound", isinstance(cls, int) and cls <= max(1, sol.n - 1)


def run_suite(
    sol: YbeSolution, ball: int = 4, depth: int = 3, seed: int = 0
) -> Iterator[tuple[str, bool]]:
    """Yield (check name, passed) for every invariant that applies to ``sol``."""
    if not 0 <= ball <= MAX_BALL:
        raise ValueError(f"ball radius must be in 0..{MAX_BALL}")
    if not 0 <= depth <= MAX_DEPTH:
        raise ValueError(f"frozen depth must be in 0..{MAX_DEPTH}")
    rng = random.Random(seed)
    yield from _solution_checks(sol)
    if not validate(sol).ok:
        return
    yield from _simple_checks(sol)
    yield from _psi_checks(sol, rng)
    yield from _group_checks(sol)
    if property_c(sol):
        yield from _frozen_checks(sol, ball, depth)
