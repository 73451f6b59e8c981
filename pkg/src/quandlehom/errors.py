"""Exception hierarchy shared by the library and the command line front end."""


class QuandleError(Exception):
    """Base class for every error raised by :mod:`quandlehom`."""

    #: process exit code used by the CLI when this error escapes
    exit_code = 2

    def to_dict(self):
        return {"error": type(self).__name__, "message": str(self)}


class ParseError(QuandleError):
    pass


class AxiomViolation(QuandleError):
    """A table fails one of the quandle axioms.

    ``axiom`` is 1 (idempotence), 2 (right invertibility) or
    3 (right self-distributivity); ``witness`` is the lexicographically
    first offending tuple of elements.
    """

    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"axiom {axiom} fails at {self.witness}")

    def to_dict(self):
        d = super().to_dict()
        d.update(axiom=self.axiom, witness=list(self.witness))
        return d


class NotAUnit(QuandleError):
    pass


class NonPlanar(QuandleError):
    pass


class InconsistentOrientation(QuandleError):
    pass


class ComplexBroken(QuandleError):
    """A chain-complex identity failed. This is an implementation bug."""

    exit_code = 1

    def __init__(self, identity, degree):
        self.identity = identity
        self.degree = degree
        super().__init__(f"{identity} fails in degree {degree}")


class NotACocycle(QuandleError):
    exit_code = 3


class WrongComponentCount(QuandleError):
    exit_code = 3
