"""kepler.errors - exceptions raised by the kepler package"""

class KeplerError(Exception):
    """KeplerError: base class for every error raised by the kepler package
because of a physical or mathematical condition (as opposed to a malformed
argument, which raises the usual ValueError/TypeError)."""

class DomainError(KeplerError, ValueError):
    """DomainError: a parameter lies outside the domain of an operation (e.g.
b > a for an ellipse, eccentricity >= 1, zero velocity)."""

class SingularityError(KeplerError):
    """SingularityError: the planet has reached the attracting center, where the
inverse-square force is undefined."""

class DegenerateOrbitError(KeplerError):
    """DegenerateOrbitError: the motion is radial (zero angular momentum), so it
has no orbital plane and no conic elements."""

class UnboundOrbitError(KeplerError):
    """UnboundOrbitError: the energy is non-negative (eccentricity >= 1), so the
orbit is a parabola or hyperbola rather than an ellipse."""

class DegenerateCurvatureError(KeplerError):
    """DegenerateCurvatureError: velocity and acceleration are collinear, so the
curvature radius is infinite."""

class PoleError(KeplerError):
    """PoleError: the raw closed-form antiderivative was evaluated at an odd
multiple of pi, where tan(theta/2) has a pole."""
