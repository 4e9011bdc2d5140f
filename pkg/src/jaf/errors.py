"""Exception hierarchy shared across the package."""


class JafError(Exception):
    """Base class for all library errors."""


class RingMismatch(JafError):
    """Operands belong to different rings."""


class DivisionByNonUnit(JafError):
    """Division was attempted by an element that is not a unit."""


class NonInvertibleFactorial(JafError):
    """d! is not invertible in the ring, so polarization is undefined."""


class NotAField(JafError):
    """The operation is only defined over a field."""


class DimensionMismatch(JafError):
    """Vector or argument dimensions do not match the form's arity/rank."""


class RankOverflow(JafError):
    """Doubling would exceed the maximal composition-algebra rank 8."""


class NonUnitMu(JafError):
    """The Cayley-Dickson parameter must be a unit."""


class BadBasePoint(JafError):
    """The supplied base point does not evaluate to 1."""


class NonUnitGamma(JafError):
    """All diagonal scaling entries must be units."""


class NotAssociative(JafError):
    """The multiplication table failed an associativity check."""


class AxiomFailure(JafError):
    """A required axiom check failed; carries the failing report."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class NotInvertible(JafError):
    """The element has non-unit norm and admits no inverse."""


class NotIdempotentSystem(JafError):
    """The supplied elements are not a complete orthogonal idempotent system."""


class NotPrimeField(JafError):
    """The operation requires a prime-field base ring."""


class AdmissibilityFailure(AxiomFailure):
    """The admissibility conditions for a construction input failed."""


class AmpleFailure(AxiomFailure):
    """The ample-pair conditions failed."""


class NormCompatibilityFailure(JafError):
    """The hermitian element norm does not match beta * involute(beta)."""


class NotHermitian(JafError):
    """The Gram matrix is not hermitian."""


class Singular(JafError):
    """The matrix is not invertible."""


class EmbeddingFailure(AxiomFailure):
    """The constructed embedding failed a verification check."""


class UnsupportedTensor(JafError):
    """Tensor product of two non-line summands is not defined."""


class ShapeMismatch(JafError):
    """The module is not shaped as a rank-one module over the given algebra."""


class UnknownTemplate(JafError):
    """No decomposition template with that name exists."""


class ParameterOutOfTemplate(JafError):
    """The parameters violate the template's constraints."""
