"""Exception types shared across the package."""


class PopupError(Exception):
    """Base class for all package-specific errors."""


class IsometryViolation(PopupError):
    """Cut-length sums of a slice disagree with the declared chain length."""


class SingularSystem(PopupError):
    """A linear solve is rank deficient or too ill conditioned to trust."""

    def __init__(self, message, condition_number=None):
        super().__init__(message)
        self.condition_number = condition_number


class DegenerateStar(PopupError):
    """A vertex star has fewer than three ring vertices or zero-area faces."""


class InvalidAssembly(PopupError):
    """A five-cell assembly's triangulation is degenerate or self-intersecting."""


class RankDeficientFit(PopupError):
    """The quadric fit behind the fundamental forms has a rank-deficient design."""


class DomainExceeded(PopupError):
    """A slice position or sample point lies outside the surface's domain."""


class OrderingViolation(PopupError):
    """A monotonicity requirement (slice widths, vertex order, radii) fails."""


class Infeasible(PopupError):
    """Constraint residuals cannot be reduced; reports the worst offender."""

    def __init__(self, message, residual=None, family=None):
        super().__init__(message)
        self.residual = residual
        self.family = family


class SelfIntersection(PopupError):
    """Deployed panel segments cross within a slice plane."""


class EmptyNetwork(PopupError):
    """Every branch terminated before producing a segment."""


class TopologyBroken(PopupError):
    """Connectivity or ordering fails at a sampled deployment angle."""

    def __init__(self, message, psi=None):
        super().__init__(message)
        self.psi = psi


class DegeneratePanel(PopupError):
    """A segment has zero length or was assigned a non-positive width."""


class Unattainable(PopupError):
    """A curvature target lies outside the attainable range."""

    def __init__(self, message, nearest=None):
        super().__init__(message)
        self.nearest = nearest


class ConfigError(PopupError):
    """A pipeline configuration file is missing keys or has bad values."""
