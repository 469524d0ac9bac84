"""Exception types raised across the package."""


class VariableMismatchError(ValueError):
    """Operands live over different variable lists."""


class PolySyntaxError(ValueError):
    """Malformed polynomial text.

    ``position`` is the 0-based character offset where parsing failed.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(ValueError):
    def __init__(self, name, variables):
        super().__init__(f"unknown variable {name!r}; expected one of {', '.join(variables)}")
        self.name = name


class ZeroPolynomialError(ValueError):
    """The zero polynomial has no Newton polytope."""


class DimensionPolicyError(ValueError):
    """Intrinsic dimension >= 4 and the polytope is not a simplex."""


class NotUnimodularError(ValueError):
    pass


class VerificationError(RuntimeError):
    """A mathematical self-check failed (bad transcription, wrong count, ...)."""
