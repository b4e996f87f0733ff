"""Exception hierarchy shared across the package."""


class NicholsError(Exception):
    """Base class for all package errors."""


class InputError(NicholsError, ValueError):
    """Malformed or semantically invalid user input."""


class ResourceError(NicholsError):
    """A configured size budget would be exceeded."""


class CompatibilityError(NicholsError, ValueError):
    """A module, braiding or pairing fails a structural axiom."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class VerdictError(NicholsError):
    """An operation needs a finite verdict or a verified axiom that is missing."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
