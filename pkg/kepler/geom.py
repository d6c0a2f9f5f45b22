"""kepler.geom - plane and space geometry for elliptic orbits

Angles are in radians. Polar coordinates put the focus at the origin and use
the convention

    r = p / (1 - eps cos(theta))

so theta = 0 is the APOAPSIS (largest r) and theta = pi the periapsis. Most
textbooks use 1 + eps cos(theta), which swaps the two apsides.
"""

import math
import numpy as np

from dataclasses import dataclass
from .errors import DomainError, DegenerateCurvatureError

# relative tolerance used to validate redundant ellipse parameters
ELLIPSE_TOLERANCE = 1e-12

# |P3[v, acc]| below this fraction of |v|^3 counts as straight-line motion
CURVATURE_TOLERANCE = 1e-14

#---------
# Vectors
#---------

@dataclass(frozen=True)
class Vec2:
    """Vec2: Cartesian components of a planar vector (dimensionless simulation
units)"""
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f'Vec2 components must be finite: ({self.x}, {self.y})')

    def __add__(self, other: 'Vec2') -> 'Vec2':
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: 'Vec2') -> 'Vec2':
        return Vec2(self.x - other.x, self.y - other.y)

    def __neg__(self) -> 'Vec2':
        return Vec2(-self.x, -self.y)

    def __mul__(self, factor: float) -> 'Vec2':
        return Vec2(factor * self.x, factor * self.y)

    __rmul__ = __mul__

    def dot(self, other: 'Vec2') -> float:
        return self.x * other.x + self.y * other.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

@dataclass(frozen=True)
class Vec3:
    """Vec3: Cartesian components of a vector in space"""
    x: float
    y: float
    z: float

    def __post_init__(self):
        if not all(math.isfinite(c) for c in (self.x, self.y, self.z)):
            raise DomainError(f'Vec3 components must be finite: ({self.x}, {self.y}, {self.z})')

    def __add__(self, other: 'Vec3') -> 'Vec3':
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: 'Vec3') -> 'Vec3':
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> 'Vec3':
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, factor: float) -> 'Vec3':
        return Vec3(factor * self.x, factor * self.y, factor * self.z)

    __rmul__ = __mul__

    def dot(self, other: 'Vec3') -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def norm(self) -> float:
        return math.sqrt(self.dot(self))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @staticmethod
    def from_array(a) -> 'Vec3':
        """Vec3.from_array(a) -> Vec3 built from the first three entries of a"""
        return Vec3(float(a[0]), float(a[1]), float(a[2]))

def cross_z(u: Vec2, v: Vec2) -> float:
    """cross_z(u, v) -> x1*y2 - x2*y1, the z component of the vector product of
two planar vectors. Its absolute value is the area of the parallelogram with
sides u and v."""
    return u.x * v.y - v.x * u.y

def cross3(u: Vec3, v: Vec3) -> Vec3:
    """cross3(u, v) -> the vector product [u, v], orthogonal to both u and v,
with length equal to the area of the parallelogram with sides u and v"""
    return Vec3(
        u.y * v.z - u.z * v.y,
        u.z * v.x - u.x * v.z,
        u.x * v.y - u.y * v.x,
    )

#----------
# Ellipses
#----------

@dataclass(frozen=True)
class EllipseGeometry:
    """EllipseGeometry: the redundant parameter bundle of an ellipse, holding
both its axis form (a, b) and its focal/conic form (f, eps, p). Construction
checks that all five parameters agree; use ellipse_from_axes or
ellipse_from_conic to build one."""
    a: float   # semi-major axis
    b: float   # semi-minor axis
    f: float   # focal half-distance
    eps: float # eccentricity f/a
    p: float   # semi-latus rectum b^2/a

    def __post_init__(self):
        if not (self.b > 0 and self.a >= self.b):
            raise DomainError(f'ellipse axes must satisfy a >= b > 0 (a = {self.a}, b = {self.b})')
        if not 0 <= self.eps < 1:
            raise DomainError(f'ellipse eccentricity must lie in [0, 1) (eps = {self.eps})')
        a2 = self.a * self.a
        if abs(self.f * self.f + self.b * self.b - a2) > ELLIPSE_TOLERANCE * a2:
            raise DomainError('inconsistent ellipse: f^2 + b^2 != a^2')
        if abs(self.eps * self.a - self.f) > ELLIPSE_TOLERANCE * self.a:
            raise DomainError('inconsistent ellipse: eps != f/a')
        if abs(self.p * self.a - self.b * self.b) > ELLIPSE_TOLERANCE * self.b * self.b:
            raise DomainError('inconsistent ellipse: p != b^2/a')

def ellipse_from_axes(a: float, b: float) -> EllipseGeometry:
    """ellipse_from_axes(a, b) -> EllipseGeometry for the ellipse
x^2/a^2 + y^2/b^2 = 1 with a >= b > 0"""
    if not (b > 0 and a >= b):
        raise DomainError(f'ellipse axes must satisfy a >= b > 0 (a = {a}, b = {b})')
    f = math.sqrt((a - b) * (a + b))
    return EllipseGeometry(a = a, b = b, f = f, eps = f / a, p = b * b / a)

def ellipse_from_conic(p: float, eps: float) -> EllipseGeometry:
    """ellipse_from_conic(p, eps) -> EllipseGeometry for the conic
r = p/(1 - eps cos theta), which must be an ellipse (0 <= eps < 1)"""
    if p <= 0:
        raise DomainError(f'semi-latus rectum must be positive (p = {p})')
    if not 0 <= eps < 1:
        raise DomainError(f'eps = {eps} is not an ellipse (parabolic and hyperbolic conics are not supported)')
    one_minus_e2 = (1 - eps) * (1 + eps)
    a = p / one_minus_e2
    b = p / math.sqrt(one_minus_e2)
    return EllipseGeometry(a = a, b = b, f = a * eps, eps = eps, p = p)

def ellipse_area(g: EllipseGeometry) -> float:
    """ellipse_area(g) -> pi*a*b"""
    return math.pi * g.a * g.b

def ellipse_point(g: EllipseGeometry, t: float) -> tuple[Vec2, Vec2, Vec2]:
    """ellipse_point(g, t) -> (position, first derivative, second derivative) of
the centred parametrization x = a cos t, y = b sin t"""
    c, s = math.cos(t), math.sin(t)
    return (Vec2(g.a * c, g.b * s),
            Vec2(-g.a * s, g.b * c),
            Vec2(-g.a * c, -g.b * s))

#--------------------
# Polar coordinates
#--------------------

def polar_radius(p: float, eps: float, theta: float) -> float:
    """polar_radius(p, eps, theta) -> p/(1 - eps cos theta), the focal distance
of the ellipse point at polar angle theta (theta = 0 is the apoapsis)"""
    if p <= 0:
        raise DomainError(f'semi-latus rectum must be positive (p = {p})')
    if not 0 <= eps < 1:
        raise DomainError(f'eccentricity must lie in [0, 1) (eps = {eps})')
    return p / (1 - eps * math.cos(theta))

def polar_to_cartesian(r: float, theta: float) -> Vec2:
    """polar_to_cartesian(r, theta) -> (r cos theta, r sin theta)"""
    if r < 0:
        raise DomainError(f'polar radius must be non-negative (r = {r})')
    return Vec2(r * math.cos(theta), r * math.sin(theta))

def polar_velocity(r: float, theta: float, r_dot: float, theta_dot: float) -> Vec2:
    """polar_velocity(r, theta, r_dot, theta_dot) -> Cartesian velocity of a point
moving in polar coordinates. Its squared length is r_dot^2 + r^2 theta_dot^2."""
    c, s = math.cos(theta), math.sin(theta)
    return Vec2(r_dot * c - r * theta_dot * s,
                r_dot * s + r * theta_dot * c)

def circular_motion(R: float, omega: float, t: float) -> tuple[Vec2, Vec2, Vec2]:
    """circular_motion(R, omega, t) -> (position, velocity, acceleration) of
uniform motion on the circle of radius R about the origin at angular rate omega.
The acceleration is -omega^2 times the position (centripetal, of length
omega^2 R = v^2/R)."""
    c, s = math.cos(omega * t), math.sin(omega * t)
    return (Vec2(R * c, R * s),
            Vec2(-R * omega * s, R * omega * c),
            Vec2(-R * omega * omega * c, -R * omega * omega * s))

#-----------
# Curvature
#-----------

def curvature_radius(v: Vec2, acc: Vec2) -> float:
    """curvature_radius(v, acc) -> |v|^3/|P3[v, acc]|, the radius of the
osculating circle of a curve with first derivative v and second derivative acc.
Raises DegenerateCurvatureError when v and acc are (numerically) collinear."""
    speed = v.norm()
    area = abs(cross_z(v, acc))
    if area <= CURVATURE_TOLERANCE * speed**3:
        raise DegenerateCurvatureError('velocity and acceleration are collinear: curvature radius is infinite')
    return speed**3 / area

def circumradius(p1: Vec2, p2: Vec2, p3: Vec2) -> float:
    """circumradius(p1, p2, p3) -> radius of the circle through three points,
|p1p2| |p2p3| |p3p1| / (2 |P3[p2 - p1, p3 - p1]|). For three nearby points of a
curve this converges to the curvature radius."""
    area = abs(cross_z(p2 - p1, p3 - p1))
    if area == 0:
        raise DegenerateCurvatureError('collinear points have no circumcircle')
    return (p2 - p1).norm() * (p3 - p2).norm() * (p1 - p3).norm() / (2 * area)

def normal_accel_projection(acc: Vec2, v: Vec2) -> float:
    """normal_accel_projection(acc, v) -> |P3[acc, v]|/|v|, the length of the
component of acc normal to the velocity v. It equals |v|^2/R whenever the
curvature radius R is finite."""
    speed = v.norm()
    if speed <= 0:
        raise DomainError('normal acceleration is undefined for zero velocity')
    return abs(cross_z(acc, v)) / speed
