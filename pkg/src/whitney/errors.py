"""Exception hierarchy.

Each module raises errors from one family; the CLI maps families to exit
codes (see README).
"""


class WhitneyError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class InputError(WhitneyError):
    """Malformed file, unparsable rational, unknown identifier."""

    exit_code = 2


class ComplexError(WhitneyError):
    """Simplicial-complex invariant violation (simplicial module)."""

    exit_code = 3


class MapError(ComplexError):
    """Vertex assignment does not induce a simplicial map."""


class HomologyError(WhitneyError):
    """Chain/homology precondition violation (homology module)."""

    exit_code = 4


class CalculusError(WhitneyError):
    """Constructible-function precondition violation (calculus module)."""

    exit_code = 5


class NotEulerError(CalculusError):
    """Operation requires an Euler function / Euler space."""


class PolarError(WhitneyError):
    """Affine-map precondition violation (polar module)."""

    exit_code = 6


class DegenerateMapError(PolarError):
    """Simplexwise-linear map fails the per-simplex nondegeneracy test."""

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender
