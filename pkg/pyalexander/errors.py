class InputError(Exception):
    """
    Raised when a curve description or a request cannot be accepted.
    """


class CurveSyntaxError(InputError):
    """
    Raised when a curve file does not follow the grammar.

    Args:
        message (str): What went wrong.
        line (int): 1-based line number of the offending text.
        column (int): 1-based column number of the offending text.
    """

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ExponentError(InputError):
    """
    Raised when a parametrization has an exponent it must not have.
    """


class NegativeExponentError(ExponentError, CurveSyntaxError):
    """
    Raised when a term is written with a negative power of t.
    """


class NonPositiveOrderError(ExponentError):
    """
    Raised when a branch has a constant term or is identically zero.
    """


class ZeroDenominatorError(CurveSyntaxError):
    """
    Raised when a fractional coefficient has a zero denominator.
    """


class EmptyInputError(InputError):
    """
    Raised when a curve has no branches.
    """


class TooManyBranchesError(InputError):
    """
    Raised when a curve has more branches than the configured maximum.
    """


class NonPrimitiveError(InputError):
    """
    Raised when a parametrization covers its image more than once.
    """


class ReturnsToOriginError(InputError):
    """
    Raised when a parametrization reaches the origin at a parameter other
    than t = 0, so its image has more than one branch there.
    """


class DuplicateBranchError(InputError):
    """
    Raised when two branches parametrize the same curve.
    """


class DegenerateParametrizationError(InputError):
    """
    Raised when both coordinates of a parametrization vanish.
    """


class SameBranchError(InputError):
    """
    Raised when an intersection multiplicity is requested for a branch
    and itself (the composition vanishes identically).
    """


class UnknownExampleError(InputError):
    """
    Raised when a built-in example curve is requested that does not exist.
    """


class ComputationError(Exception):
    """
    Raised when a computation cannot be completed or certified.
    """


class CertificationFailedError(ComputationError):
    """
    Raised when a self-check on a computed invariant does not hold.
    """


class BudgetExceededError(ComputationError):
    """
    Raised when a job needs more cells than the configured budget.
    """


class OutOfBoxError(ComputationError):
    """
    Raised when a value vector outside the computed box is queried.
    """


class NotStabilizedError(ComputationError):
    """
    Raised when coefficients on the margin of the box do not vanish.
    Raising the margin usually helps.
    """


class NotDivisibleError(ComputationError):
    """
    Raised when an exact division by t1*...*tr - 1 leaves a remainder.

    Args:
        message (str): What went wrong.
        remainder: The nonzero remainder, a LaurentPoly.
    """

    def __init__(self, message, remainder=None):
        self.remainder = remainder
        super().__init__(message)


class WindowExceededError(ComputationError):
    """
    Raised when a series is read beyond the window it was computed on.
    """


def budget_exceeded_exception_factory(what, cells, budget):
    """A factory function for BudgetExceededError."""
    return BudgetExceededError(
        f"{what} needs {cells} cells, but the budget is {budget}. "
        f"Raise --max-cells or lower --margin/--order."
    )


def out_of_box_exception_factory(v, upper):
    """A factory function for OutOfBoxError."""
    return OutOfBoxError(
        f"Value vector {tuple(v)} lies outside the box; "
        f"coordinates may not exceed {tuple(b + 1 for b in upper)}"
    )


def not_stabilized_exception_factory(what, v, coefficient):
    """A factory function for NotStabilizedError."""
    return NotStabilizedError(
        f"{what} has coefficient {coefficient} at {tuple(v)} on the box margin; "
        f"increase --margin"
    )
