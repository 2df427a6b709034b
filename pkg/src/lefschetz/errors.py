"""Exception hierarchy shared by all modules."""


class InputError(ValueError):
    """Malformed or mutually inconsistent arguments (wrong surface, bad index, bad file)."""


class CapacityError(RuntimeError):
    """The request exceeds a documented desk-scale bound."""


class NotApplicable(RuntimeError):
    """A move's applicability criterion fails on this input; the input itself is valid."""


class Unsupported(RuntimeError):
    """The operation is outside the implemented scope (e.g. invariants over a non-disk base)."""
