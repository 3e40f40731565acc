"""Exception hierarchy shared by every module of the package."""


class GrDecompError(Exception):
    """Base class for all errors raised by grdecomp."""


class ExpressionSyntaxError(GrDecompError):
    pass


class UndeclaredVariable(GrDecompError):
    pass


class InexactDivision(GrDecompError):
    pass


class NonInvertibleDenominator(GrDecompError):
    pass


class NonSquare(GrDecompError):
    pass


class AlgebraMismatch(GrDecompError):
    pass


class FieldMismatch(GrDecompError):
    pass


class NoSolution(GrDecompError):
    pass


class NegativeMultiplicity(GrDecompError):
    pass


class SpecializationError(GrDecompError):
    """A specialization or tower that cannot be built as requested."""


class NonUnitAssignment(SpecializationError):
    pass


class FractionFieldMismatch(SpecializationError):
    pass


class KernelNotNested(SpecializationError):
    pass


class PhiNotDefinedOnB(SpecializationError):
    pass


class LatticeNotFound(GrDecompError):
    pass


class UnsupportedField(GrDecompError):
    pass


class DimensionBound(GrDecompError):
    pass


class NotSplit(GrDecompError):
    pass


class NotGradable(GrDecompError):
    pass


class MeatAxeFailure(GrDecompError):
    """The randomized splitter gave up without certifying irreducibility."""


class OracleMismatch(GrDecompError):
    pass


class FactorizationFailure(GrDecompError):
    pass


class SchemaError(GrDecompError):
    pass


class SessionValidationError(GrDecompError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or []


class UnknownFixture(GrDecompError):
    pass
