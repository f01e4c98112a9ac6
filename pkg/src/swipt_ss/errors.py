"""Exception types shared across the package.

Plain precondition violations (bad shapes, nonpositive budgets, unknown
config keys) raise ``ValueError`` directly; the classes here mark states a
caller may want to catch and handle separately.
"""


class NumericalError(RuntimeError):
    """A numerical routine failed to converge; carries the residual when known."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DegenerateChannelError(ValueError):
    """A channel matrix is rank deficient; ``index`` names the zero eigenchannel."""

    def __init__(self, index):
        super().__init__(f"eigenchannel {index} has zero gain (rank-deficient channel)")
        self.index = index


class NoHarvestingChannelError(ValueError):
    """Received RF power was requested for an allocation with no EH channel."""


class InfeasibleRateError(ValueError):
    """A positive rate requirement cannot be met with the given channels."""


class ApproxInfeasibleError(InfeasibleRateError):
    """Closed-form equal power allocation leaves no candidate with nonnegative EH power."""


class InternalSolverError(RuntimeError):
    """A solver internal consistency assertion failed (numerical boundary case)."""
