"""Exception hierarchy shared by every index component."""


class DynSAError(Exception):
    """Base class for all errors raised by :mod:`dynsa`."""


class PositionError(DynSAError, IndexError):
    """A position or rank fell outside its valid range."""


class SymbolError(DynSAError, ValueError):
    """An invalid symbol was supplied (e.g. the sentinel as a substitution)."""


class VersionError(DynSAError):
    """An index was asked to consume a change out of order.

    The index has to be rebuilt from the text when this happens.
    """


class InvariantViolation(DynSAError, AssertionError):
    """An internal consistency guard tripped.

    These guards encode structural facts about periodic occurrences and pivot
    selection; they are expected never to fire on a correct build.
    """
