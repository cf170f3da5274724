"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LieToolError(Exception):
    """Base class for all errors raised by frobenius_lie."""


class FieldMismatchError(LieToolError, TypeError):
    """Exact and approximate scalars were combined in one computation."""


class DimensionError(LieToolError, ValueError):
    """Shapes or lengths of the operands do not agree."""


class UnsupportedFieldError(LieToolError):
    """The operation is only defined over the exact rational field."""


class ConvergenceError(LieToolError, ArithmeticError):
    """An iterative method failed to converge within its budget."""


class DegenerateFormError(LieToolError, ValueError):
    """A skew form expected to be nondegenerate is singular."""


class InvalidAlgebraError(LieToolError, ValueError):
    """Structure constants fail antisymmetry or the Jacobi identity."""


class LsaAxiomError(LieToolError, ValueError):
    """A product fails left-symmetry or the commutator identity."""


class CspViolation(LieToolError, ValueError):
    """A matrix is not infinitesimally conformal for the standard symplectic form."""


class ParseError(LieToolError, ValueError):
    """An algebra file or scalar literal could not be parsed."""
