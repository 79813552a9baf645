"""Exception hierarchy shared by every module of the package."""


class WreathGraphsError(Exception):
    """Base class for all errors raised by wreathgraphs."""


class InputError(WreathGraphsError, ValueError):
    """Malformed or inconsistent input data."""


class DuplicateLabel(InputError):
    pass


class UnknownLabel(InputError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class CycleDetected(InputError):
    pass


class LoopEdge(InputError):
    pass


class SchemaError(InputError):
    pass


class NotAncestral(InputError):
    pass


class BadPoint(InputError):
    pass


class NotAssociative(InputError):
    pass


class NoIdentity(InputError):
    pass


class NoInverse(InputError):
    pass


class NotClosed(InputError):
    pass


class NotSymmetric(InputError):
    pass


class ContainsIdentity(InputError):
    pass


class DoesNotGenerate(InputError):
    pass


class SizeCap(WreathGraphsError):
    """A computation would exceed a configured size limit."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class VerificationFailed(WreathGraphsError):
    """A machine check of a claimed identity found a counterexample."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
