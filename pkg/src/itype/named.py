"""Named solutions used throughout the tests and the command line."""

from .solution import Permutation, YbeSolution, from_gf_tables, from_relations, trivial_solution

__all__ = ["sol_a", "sol_b", "triv", "almost_trivial_6", "NAMED"]


def _p(n, *cycles):
    return Permutation.from_cycles(n, cycles)


def sol_a() -> YbeSolution:
    """Four atoms, satisfies Property (C); |W| = 16."""
    g = [_p(4, (2, 3)), _p(4, (1, 4)), _p(4, (1, 2, 4, 3)), _p(4, (1, 3, 4, 2))]
    f = [_p(4, (2, 4)), _p(4, (1, 3)), _p(4, (1, 4, 3, 2)), _p(4, (1, 2, 3, 4))]
    return from_gf_tables(4, g, f)


def sol_b() -> YbeSolution:
    """Four atoms, fails Property (C); |W| = 48."""
    rels = [
        ((1, 2), (3, 1)),
        ((2, 2), (4, 3)),
        ((1, 3), (4, 1)),
        ((3, 3), (2, 4)),
        ((1, 4), (2, 1)),
        ((4, 4), (3, 2)),
    ]
    return from_relations(4, rels)


def triv(n: int) -> YbeSolution:
    return trivial_solution(n)


def almost_trivial_6() -> YbeSolution:
    """g_i = f_i = id for i <= 4, g_5 = g_6 = f_5 = f_6 = (5 6)."""
    ident = Permutation.identity(6)
    swap = _p(6, (5, 6))
    maps = [ident] * 4 + [swap, swap]
    return from_gf_tables(6, maps, maps)


NAMED = {
    "sol-a": sol_a,
    "sol-b": sol_b,
    "triv1": lambda: triv(1),
    "triv2": lambda: triv(2),
    "triv3": lambda: triv(3),
    "triv4": lambda: triv(4),
    "almost-trivial-6": almost_trivial_6,
}
