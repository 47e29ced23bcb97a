"""Exception types shared across the package."""


class SexticsError(Exception):
    """Base class for all package errors."""


class NotSquarefree(SexticsError):
    """A squarefree polynomial was required but a repeated root was found."""


class DegenerateInput(SexticsError):
    """An operation received input it cannot meaningfully process."""


class ReconstructFailed(SexticsError):
    """Rational reconstruction failed; the modulus product is too small."""


class ResourceLimit(SexticsError):
    """A configured computational budget (S-pairs, retries) was exceeded."""


class UnexpectedDimension(SexticsError):
    """A linear system's nullspace dimension differs from the generic value."""


class NotConjStable(SexticsError):
    """Conditions are not stable under complex conjugation."""


class NonGenericVanishing(SexticsError):
    """A curve vanishes at a point it must avoid."""


class GenericityFailure(SexticsError):
    """Projection genericity could not be achieved within the retry budget."""


class WrongResidualDegree(SexticsError):
    """The residual factor has the wrong degree; internal invariant broken."""


class NotPrincipal(SexticsError):
    """An elimination ideal expected to be principal was not."""


class NotTriplePoint(SexticsError):
    """The curve does not have an ordinary triple point at the given point."""


class SingularSystem(SexticsError):
    """A linear solve for plane coefficients was singular or inconsistent."""


class CrossCheckFailed(SexticsError):
    """Two independent routes disagreed; indicates an internal error."""


class SpecializationDegenerate(SexticsError):
    """A parameter specialization is outside the general-position locus."""


class InterpolationUnstable(SexticsError):
    """Rational-function reconstruction disagrees on held-out points."""


class DegenerateConfiguration(SexticsError):
    """A point configuration failed validation or downstream genericity."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class ProjectionDegenerate(SexticsError):
    """A projection of the plane section dropped degree."""
