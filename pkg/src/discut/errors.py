"""Exception types shared across the package."""


class DiscutError(Exception):
    """Base class. ``code`` is a short machine-readable tag."""

    code = "error"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.message = message
        self.witness = witness


class InvalidInput(DiscutError):
    code = "invalid-input"


class PreconditionViolation(DiscutError):
    code = "precondition-violation"


class OutOfScope(DiscutError):
    code = "out-of-scope"


class InternalError(DiscutError):
    """A guarantee that should hold by construction did not.

    ``graph`` carries the instance (usually the reduced one) for triage.
    """

    code = "internal-error"

    def __init__(self, message, witness=None, graph=None):
        super().__init__(message, witness)
        self.graph = graph
