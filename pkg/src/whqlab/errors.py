"""Exception hierarchy.

Verification failures (a map that should equalize does not, a matrix that
should be invertible is not) derive from :class:`VerificationError`; the CLI
maps those to exit code 1 and everything else to exit code 2.
"""


class WhqError(Exception):
    """Base class for all errors raised by whqlab."""


class VerificationError(WhqError):
    """A construction or check failed on exact evaluation."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SignatureMismatch(WhqError):
    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right


class FieldMismatch(WhqError):
    pass


class NotIdempotent(VerificationError):
    pass


class DoesNotEqualize(VerificationError):
    pass


class DoesNotCoequalize(VerificationError):
    pass


class NotInvertible(VerificationError):
    def __init__(self, message, rank=None, dim=None):
        super().__init__(message, witness={"rank": rank, "dim": dim})
        self.rank = rank
        self.dim = dim


class NotAWhq(VerificationError):
    pass


class AssociativityFailure(VerificationError):
    pass


class FactorizationFailure(VerificationError):
    pass


class AlmostLinealityRequired(VerificationError):
    pass


class NotAHopfQuasigroup(VerificationError):
    pass


class NotALoop(VerificationError):
    pass


class IPVerificationFailed(VerificationError):
    pass


class InvalidGroupoid(VerificationError):
    pass


class AxiomVerificationFailed(VerificationError):
    pass


class StructureFileError(WhqError):
    """Malformed structure file (exit code 2)."""


class ExprSyntaxError(WhqError):
    """Malformed morphism expression; ``line`` and ``column`` are 1-based."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class UnknownName(WhqError):
    def __init__(self, name, line=None, column=None):
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"unknown name {name!r}{where}")
        self.name = name
        self.line = line
        self.column = column


class ArityMismatch(WhqError):
    """Composite of two expressions whose signatures do not meet."""

    def __init__(self, message, left=None, right=None):
        super().__init__(message)
        self.left = left
        self.right = right
