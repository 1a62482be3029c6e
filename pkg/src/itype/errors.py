"""Exception types shared across the package."""


class ItypeError(Exception):
    """Base class for every error raised by this package."""


class SolutionFormatError(ItypeError, ValueError):
    """A solution table or file is malformed (dimensions, ranges, duplicates)."""


class DegenerateSolution(ItypeError):
    """Some g_x or f_x is not a bijection, so the permutation view is undefined."""


class FrozenUniquenessViolated(ItypeError):
    """An atom has zero or several frozen partners."""


class PropertyCViolated(ItypeError):
    """An operation that needs Property (C) was called on a solution without it."""


class ClassTooLarge(ItypeError):
    """A rewriting closure exceeded its configured bound."""


class ClosureTooLarge(ItypeError):
    """A group closure exceeded its configured bound."""


class EquivalenceViolated(ItypeError):
    """The section criterion and Property (C) disagree on a solution."""


class NTooLarge(ItypeError, ValueError):
    """Census requested outside the supported range 1 <= n <= 4."""
