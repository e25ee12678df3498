"""Exception hierarchy shared by all interpolation routines."""


class InterpolationError(ValueError):
    """Base class for every error raised by this package."""


class DuplicateNodeError(InterpolationError):
    """Two interpolation nodes compare equal."""


class LengthMismatchError(InterpolationError):
    """Paired sequences (nodes/values, permutation/nodes) differ in length."""


class UnknownFamilyError(InterpolationError):
    """A node or right-hand-side family label is not recognised."""


class NumericalOverflow(InterpolationError, ArithmeticError):
    """An update produced non-finite numbers or lost every significant digit.

    Once raised by :func:`recurinterp.incremental.add_node`, the interpolant
    the update was applied to should be treated as failed.
    """


class DegenerateDowndateError(InterpolationError, ArithmeticError):
    """The leading downdated Newton coefficient is zero or non-finite."""


class SingularPivotError(InterpolationError, ArithmeticError):
    """A pivot or nodal product in the direct solver is zero or non-finite."""


class SingularExactError(InterpolationError, ArithmeticError):
    """High-precision elimination met a column with no nonzero pivot."""


class ZeroNormError(InterpolationError, ZeroDivisionError):
    """Relative error requested against a zero reference vector."""
