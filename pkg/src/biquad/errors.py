"""Exception hierarchy.

Every error carries a stable ``code`` string; the CLI reports it verbatim.
"""


class BiquadError(Exception):
    """Precondition violation in one of the algebraic operations."""

    code = "BiquadError"

    def __init__(self, detail=""):
        super().__init__(detail or self.code)
        self.detail = detail


class InvalidInput(BiquadError):
    """Malformed field descriptor, element literal or payload."""

    code = "InvalidInput"


class InvalidField(InvalidInput):
    code = "InvalidField"


class ZeroInput(BiquadError):
    code = "ZeroInput"


class UnfactorableInteger(BiquadError):
    code = "UnfactorableInteger"


class SquareInput(BiquadError):
    code = "SquareInput"


class NonInvertible(BiquadError):
    code = "NonInvertible"


class ZeroConstantTerm(BiquadError):
    code = "ZeroConstantTerm"


class ReduciblePolynomial(BiquadError):
    code = "ReduciblePolynomial"


class NotElementaryAbelian(BiquadError):
    code = "NotElementaryAbelian"


class DegenerateParameters(BiquadError):
    code = "DegenerateParameters"

    def __init__(self, which, detail=""):
        super().__init__(detail or f"{which} is a square")
        self.which = which


class NotRadicalElementaryAbelian(BiquadError):
    code = "NotRadicalElementaryAbelian"


class CyclicInput(BiquadError):
    code = "CyclicInput"


class NotNonGalois(BiquadError):
    code = "NotNonGalois"


class TowerTooDeep(BiquadError):
    code = "TowerTooDeep"


class GeneratorIsSquare(BiquadError):
    code = "GeneratorIsSquare"


class OracleScopeExceeded(BiquadError):
    code = "OracleScopeExceeded"


class ReducibleInput(BiquadError):
    code = "ReducibleInput"
