import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from itype.census import enumerate_solutions
from itype.errors import PropertyCViolated
from itype.monoid import (
    FrozenVector,
    all_simples,
    atom_divisors,
    count_representatives,
    delta,
    equivalent_words,
    format_word,
    frozen_commute_check,
    frozen_conjugate,
    frozen_conjugation_table,
    frozen_decomposition,
    frozen_words,
    greedy_normal_form,
    is_simple,
    left_divisor_atoms,
    left_lcm_atoms,
    parse_word,
    right_complement,
    right_divisor_atoms,
    right_lcm_atoms,
    simple_from_subset,
    simple_of_word,
    words_equal,
)
from itype.named import sol_a, sol_b, triv
from itype.solution import frozen_pairs, property_c


def _class(sol, w):
    """Independent closure: apply S to every adjacent pair until stable."""
    seen, todo = {tuple(w)}, [tuple(w)]
    while todo:
        u = todo.pop()
        for i in range(len(u) - 1):
            v = u[:i] + sol.S(u[i], u[i + 1]) + u[i + 2 :]
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return frozenset(seen)


def _oracle_simples(sol):
    """Classes of words of length <= n with no frozen factor in any representative."""
    frozen = {p.word for p in frozen_pairs(sol)}
    classes = set()
    for k in range(sol.n + 1):
        for w in itertools.product(sol.atoms, repeat=k):
            c = _class(sol, w)
            if not any(u[i : i + 2] in frozen for u in c for i in range(len(u) - 1)):
                classes.add(c)
    return classes


def _census_and_named():
    sols = [s for n in (1, 2, 3) for s in enumerate_solutions(n, up_to_iso=False)]
    return sols + [sol_a(), sol_b()]


class TestWords:
    def test_parse_format(self):
        assert parse_word("1 3 2") == (1, 3, 2)
        assert format_word((1, 3, 2)) == "1 3 2"
        assert parse_word("") == ()

    def test_sol_a_class(self, a):
        assert equivalent_words(a, (1, 2)) == {(1, 2), (3, 3)}
        assert equivalent_words(a, (2,)) == {(2,)}

    def test_delta_class_size(self, a):
        assert len(equivalent_words(a, delta(a).canonical_word)) == 24

    def test_words_equal(self, a):
        assert words_equal(a, (1, 3), (2, 4))
        assert not words_equal(a, (1, 1), (2, 2))
        assert not words_equal(a, (1,), (1, 1))
        assert words_equal(a, (4, 1, 2), (4, 1, 2))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(1, 4), max_size=5))
    def test_class_matches_oracle(self, w):
        a = sol_a()
        assert equivalent_words(a, w) == _class(a, w)


class TestLcm:
    def test_right_lcm(self, a):
        assert right_lcm_atoms(a, 1, 2) == (1, 3)
        assert right_lcm_atoms(a, 3, 4) == (3, 2)
        assert words_equal(a, right_lcm_atoms(a, 2, 1), (1, 3))
        assert right_lcm_atoms(a, 2, 2) == (2,)

    def test_left_lcm(self, a):
        assert left_lcm_atoms(a, 1, 2) == (4, 1)
        assert words_equal(a, (4, 1), (3, 2))
        assert left_lcm_atoms(a, 3, 3) == (3,)
        assert words_equal(triv(2), left_lcm_atoms(triv(2), 1, 2), (1, 2))

    @pytest.mark.parametrize("sol", _census_and_named(), ids=lambda s: f"n{s.n}")
    def test_lcm_is_common_multiple(self, sol):
        for x, y in itertools.product(sol.atoms, repeat=2):
            r = right_lcm_atoms(sol, x, y)
            assert {x, y} <= left_divisor_atoms(sol, r)
            l = left_lcm_atoms(sol, x, y)
            assert {x, y} <= right_divisor_atoms(sol, l)

    def test_right_complement(self, a):
        # 1 . (1\2) = lcm(1, 2)
        assert words_equal(a, (1,) + right_complement(a, (1,), 2), right_lcm_atoms(a, 1, 2))
        assert right_complement(a, (2,), 2) == ()


class TestSimples:
    def test_is_simple(self, a):
        assert not is_simple(a, (1, 1))
        assert is_simple(a, (1, 3))
        assert is_simple(a, ())
        assert is_simple(a, (4,))

    def test_from_subset(self, a):
        s = simple_from_subset(a, {1, 2})
        assert s.canonical_word == (1, 3) and s.length == 2
        assert simple_from_subset(a, ()).canonical_word == ()
        d = simple_from_subset(a, a.atoms)
        assert d == delta(a) and count_representatives(a, d) == 24

    def test_atom_divisors(self, a):
        assert atom_divisors(a, simple_from_subset(a, {1, 2})) == ({1, 2}, {3, 4})
        assert atom_divisors(a, simple_from_subset(a, ())) == (frozenset(), frozenset())
        full = frozenset(a.atoms)
        assert atom_divisors(a, delta(a)) == (full, full)

    def test_sol_a_counts(self, a):
        simples = all_simples(a)
        assert len(simples) == 16
        assert [sum(s.length == k for s in simples) for k in range(5)] == [1, 4, 6, 4, 1]
        assert all(count_representatives(a, s) == math.factorial(s.length) for s in simples)

    def test_delta(self, b):
        assert delta(triv(2)).canonical_word == (1, 2)
        assert delta(b).length == 4

    @pytest.mark.parametrize("sol", _census_and_named(), ids=lambda s: f"n{s.n}")
    def test_simples_match_oracle(self, sol):
        oracle = _oracle_simples(sol)
        ours = all_simples(sol)
        assert len(oracle) == len(ours) == 2**sol.n
        assert {_class(sol, s.canonical_word) for s in ours} == oracle
        for s in ours:
            c = _class(sol, s.canonical_word)
            assert s.canonical_word == min(c)
            assert s.atoms_left == {u[0] for u in c if u}
            assert s.atoms_right == {u[-1] for u in c if u}

    def test_simple_of_word(self, a):
        assert simple_of_word(a, (2, 4)).canonical_word == (1, 3)
        with pytest.raises(ValueError):
            simple_of_word(a, (1, 1))


class TestGreedy:
    def test_frozen_word(self, a):
        assert [s.canonical_word for s in greedy_normal_form(a, (3, 4))] == [(3,), (4,)]

    def test_simple_word_is_one_factor(self, a):
        assert len(greedy_normal_form(a, (1, 3))) == 1
        assert [f.canonical_word for f in greedy_normal_form(a, ())] == [()]

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(1, 4), max_size=7), st.booleans())
    def test_recomposition_and_maximality(self, w, use_b):
        sol = sol_b() if use_b else sol_a()
        factors = greedy_normal_form(sol, w)
        assert words_equal(sol, tuple(x for f in factors for x in f.canonical_word), w)
        assert all(f.length > 0 for f in factors) or w == []
        # each factor is maximal: no atom of the next factor extends it to a simple
        for f, nxt in zip(factors, factors[1:]):
            assert all(not is_simple(sol, f.canonical_word + (x,)) for x in nxt.atoms_left)


def test_greedy_exhaustive_on_census():
    sols = [s for n in (1, 2, 3) for s in enumerate_solutions(n, up_to_iso=False)]
    for sol in sols + list(enumerate_solutions(4)):
            for k in range(7):
                for w in itertools.product(sol.atoms, repeat=k):
                    factors = greedy_normal_form(sol, w)
                    assert words_equal(sol, tuple(x for f in factors for x in f.canonical_word), w)


class TestFrozenElements:
    def test_frozen_words(self, a):
        assert frozen_words(a) == ((1, 1), (2, 2), (3, 4), (4, 3))

    def test_conjugation(self, a):
        # theta_3 = x3 x4 and x3 x4 x3 = x3 (x4 x3)
        assert frozen_conjugate(a, 3, 3) == 4
        table = frozen_conjugation_table(a)
        for z in a.atoms:
            row = table[z - 1]
            assert sorted(row) == list(a.atoms)
            for i in a.atoms:
                th_i, th_j = frozen_words(a)[i - 1], frozen_words(a)[row[i - 1] - 1]
                assert words_equal(a, th_i + (z,), (z,) + th_j)

    def test_requires_c(self, b):
        with pytest.raises(PropertyCViolated):
            frozen_conjugation_table(b)
        with pytest.raises(PropertyCViolated):
            frozen_decomposition(b, (1, 1))

    def test_decomposition_examples(self, a):
        vec, s = frozen_decomposition(a, (1, 1))
        assert vec == FrozenVector((1, 0, 0, 0)) and s.canonical_word == ()
        vec, s = frozen_decomposition(a, (1, 3))
        assert vec.is_zero() and s.canonical_word == (1, 3)
        vec, s = frozen_decomposition(a, (1, 1, 3))
        assert vec.degree == 1
        assert words_equal(a, vec.word(a) + s.canonical_word, (1, 1, 3))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(st.integers(1, 4), max_size=7))
    def test_decomposition_recomposes(self, w):
        a = sol_a()
        vec, s = frozen_decomposition(a, w)
        assert words_equal(a, vec.word(a) + s.canonical_word, w)
        assert 2 * vec.degree + s.length == len(w)

    def test_commute(self, a, trivial):
        assert frozen_commute_check(a)
        assert frozen_commute_check(trivial)

    def test_census_commute(self):
        for n in (1, 2, 3):
            for sol in enumerate_solutions(n, up_to_iso=False):
                if property_c(sol):
                    assert frozen_commute_check(sol)
