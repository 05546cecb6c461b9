"""
Exception types for the iSchur toolkit
Input validation errors also derive from ValueError, matching how the rest
of the code base reports bad input.
"""


class ISchurError(Exception):
    """Base class for every error raised by this package"""


class InvalidMatrixError(ISchurError, ValueError):
    """A matrix violates the centro-symmetric / nonnegative / even-sum invariants"""


class InvalidCompositionError(ISchurError, ValueError):
    """A composition has the wrong length, a negative part or the wrong weight"""


class ParameterRangeError(ISchurError, ValueError):
    """A generator index, rank or multiplicity is outside its admissible range"""


class CapExceededError(ISchurError, ValueError):
    """A desk-scale cap (n, r, basis size, group rank) would be exceeded"""


class AmbientMismatchError(ISchurError, ValueError):
    """Two elements live in different algebras (different n, r or rank)"""


class InadmissibleFormulaError(ISchurError, ValueError):
    """The left factor does not have the shape a closed-form formula needs"""


class InputParseError(ISchurError, ValueError):
    """JSON input could not be parsed or failed schema validation"""


class InexactDivisionError(ISchurError, ArithmeticError):
    """Division in Z[v, v^-1] left a nonzero remainder"""


class NotLaurentError(ISchurError, ArithmeticError):
    """A rational function expected to be a Laurent polynomial is not one"""


class DecompositionError(ISchurError, ArithmeticError):
    """A Hecke element did not decompose over the expected basis (residual nonzero)"""
