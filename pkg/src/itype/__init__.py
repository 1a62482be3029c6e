"""
Garside monoids of I-type and their finite signed-permutation quotients.

Submodules:

- ``solution``: set-theoretic Yang-Baxter solutions, axioms, presentations
- ``census``: exhaustive enumeration for n <= 4
- ``monoid``: word classes, simples, normal forms, frozen elements
- ``signed``: the phi / psi representations and the group W(X, S)
- ``analysis``: factor sets, section criterion, kernel and group invariants
"""

from .errors import (
    ClassTooLarge,
    ClosureTooLarge,
    DegenerateSolution,
    EquivalenceViolated,
    FrozenUniquenessViolated,
    ItypeError,
    NTooLarge,
    PropertyCViolated,
    SolutionFormatError,
)
from .solution import (
    Permutation,
    YbeSolution,
    from_gf_tables,
    from_relations,
    from_s_table,
    frozen_pairs,
    presentation,
    property_c,
    trivial_solution,
    validate,
)

__version__ = "0.1.0"
