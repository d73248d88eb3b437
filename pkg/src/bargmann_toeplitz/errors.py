"""Exception and warning types shared across the package."""


class DivergentMoment(ArithmeticError):
    """A moment integral of the symbol diverges (or its envelope fails to
    certify convergence), so the requested eigenvalue does not exist."""


class NonConvergent(ArithmeticError):
    """Quadrature results at Q and 2Q nodes disagree beyond the requested
    tolerance."""


class DomainViolation(ValueError):
    """An operand lies outside the natural domain required by the operation."""


class EnvelopeViolation(ValueError):
    """A black-box symbol evaluation exceeded its declared growth envelope;
    the symbol metadata is inconsistent."""


class DomainWarning(UserWarning):
    """Tail metadata indicates the image sequence may leave l2."""
