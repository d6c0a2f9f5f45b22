"""kepler.analytic - the analytic law of motion along an elliptic orbit

The areal constant r^2 theta' = C together with r = p/(1 - eps cos theta)
separates into

    dt = (p^2/C) Theta(theta) dtheta,   Theta(theta) = 1/(1 - eps cos theta)^2

so the time to reach polar angle theta (measured from the apoapsis, t = 0 at
theta = 0) is (p^2/C) I(theta) with I the integral of Theta from 0 to theta.

I has a closed form built from arctan(zeta), zeta = sqrt((1+eps)/(1-eps))
tan(theta/2). That raw expression jumps at every odd multiple of pi, where
tan(theta/2) has a pole; antiderivative_continuous stitches the branches into
the continuous, increasing integral with I(0) = 0. quadrature_oracle computes
the same integral numerically and is used only for verification.
"""

import math

from dataclasses import dataclass, field
from scipy import integrate, optimize
from .dynamics import OrbitElements, position_from_angle
from .errors import DomainError, PoleError
from .geom import Vec2

# absolute tolerance requested from each quadrature panel
QUADRATURE_TOLERANCE = 1e-12

def _check_eps(eps: float) -> None:
    if not 0 <= eps < 1:
        raise DomainError(f'eccentricity must lie in [0, 1) (eps = {eps})')

def theta_density(theta: float, eps: float) -> float:
    """theta_density(theta, eps) -> Theta(theta) = 1/(1 - eps cos theta)^2"""
    _check_eps(eps)
    return 1 / (1 - eps * math.cos(theta))**2

def theta_rate(theta: float, eps: float, C: float, p: float) -> float:
    """theta_rate(theta, eps, C, p) -> dtheta/dt = (C/p^2)(1 - eps cos theta)^2,
positive for counter-clockwise motion (C > 0)"""
    _check_eps(eps)
    if p <= 0:
        raise DomainError(f'semi-latus rectum must be positive (p = {p})')
    return C / (p * p) * (1 - eps * math.cos(theta))**2

#--------------------------
# Closed-form antiderivative
#--------------------------

def _prefactor(eps: float) -> float:
    # sqrt((1-eps)/(1+eps)) * 2/((1 - eps^2)(1 - eps))
    return math.sqrt((1 - eps) / (1 + eps)) * 2 / ((1 - eps) * (1 + eps) * (1 - eps))

def _is_pole(theta: float, phi: float) -> bool:
    return abs(abs(phi) - math.pi) <= 4 * math.ulp(max(abs(theta), math.pi))

def antiderivative_raw(theta: float, eps: float) -> float:
    """antiderivative_raw(theta, eps) -> the closed form

    K (arctan zeta + eps zeta/(zeta^2 + 1)),
    zeta = sqrt((1+eps)/(1-eps)) tan(theta/2),
    K = sqrt((1-eps)/(1+eps)) 2/((1-eps^2)(1-eps)),

an antiderivative of Theta on each interval between consecutive odd multiples
of pi, where it jumps. Requires 0 < eps < 1; raises PoleError at the poles."""
    if not 0 < eps < 1:
        raise DomainError(f'the closed form needs 0 < eps < 1 (eps = {eps})')
    phi = math.remainder(theta, 2 * math.pi)
    if _is_pole(theta, phi):
        raise PoleError(f'tan(theta/2) has a pole at theta = {theta}')
    zeta = math.sqrt((1 + eps) / (1 - eps)) * math.tan(phi / 2)
    return _prefactor(eps) * (math.atan(zeta) + eps * zeta / (zeta * zeta + 1))

def period_integral(eps: float) -> float:
    """period_integral(eps) -> the increase of the integral of Theta over one
revolution, twice the limit of the closed form as theta -> pi from below
(arctan zeta -> pi/2, zeta/(zeta^2 + 1) -> 0). Equals 2 pi/(1 - eps^2)^(3/2)."""
    _check_eps(eps)
    if eps == 0:
        return 2 * math.pi
    return _prefactor(eps) * math.pi

def antiderivative_continuous(theta: float, eps: float) -> float:
    """antiderivative_continuous(theta, eps) -> the integral of Theta from 0 to
theta, for any real theta: the raw closed form on (-pi, pi), continued by
I(theta + 2 pi) = I(theta) + period_integral(eps), with the one-sided limit at
the poles. Continuous and strictly increasing, with I(0) = 0."""
    _check_eps(eps)
    if eps == 0:
        return theta
    phi = math.remainder(theta, 2 * math.pi)
    n = round((theta - phi) / (2 * math.pi))
    period = period_integral(eps)
    if _is_pole(theta, phi):
        return n * period + math.copysign(period / 2, phi)
    return n * period + antiderivative_raw(phi, eps)

def quadrature_oracle(theta: float, eps: float) -> float:
    """quadrature_oracle(theta, eps) -> the integral of Theta from 0 to theta by
adaptive Gauss-Kronrod quadrature (scipy.integrate.quad), split into panels at
the multiples of pi so that each panel holds at most one peak of Theta."""
    _check_eps(eps)
    if theta == 0:
        return 0.0
    def density(x: float) -> float:
        return 1 / (1 - eps * math.cos(x))**2
    sign = 1 if theta > 0 else -1
    edges = [0.0]
    k = 1
    while k * math.pi < abs(theta):
        edges.append(sign * k * math.pi)
        k += 1
    edges.append(theta)
    total = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        value, _ = integrate.quad(density, lo, hi,
                                  epsabs = QUADRATURE_TOLERANCE,
                                  epsrel = 1e-13,
                                  limit = 200)
        total += value
    return total

#----------
# Time law
#----------

@dataclass(frozen=True)
class TimeLaw:
    """TimeLaw: the dependence of time on polar angle along an ellipse,
t = I(theta)/rate with rate = C/p^2. The integral over one revolution is cached
in period_integral at construction."""
    eps: float
    rate: float # C/p^2
    period_integral: float = field(init = False)

    def __post_init__(self):
        _check_eps(self.eps)
        if self.rate <= 0:
            raise DomainError(f'time law rate must be positive (rate = {self.rate})')
        object.__setattr__(self, 'period_integral', period_integral(self.eps))

    def period(self) -> float:
        """law.period() -> orbital period, period_integral/rate"""
        return self.period_integral / self.rate

    @staticmethod
    def from_elements(elements: OrbitElements) -> 'TimeLaw':
        """TimeLaw.from_elements(elements) -> time law of a bound orbit"""
        return TimeLaw(eps = elements.eps, rate = abs(elements.C) / elements.p**2)

def time_from_angle(theta: float, law: TimeLaw) -> float:
    """time_from_angle(theta, law) -> time to move from the apoapsis (theta = 0,
t = 0) to polar angle theta"""
    return antiderivative_continuous(theta, law.eps) / law.rate

def angle_from_time(t: float, law: TimeLaw) -> float:
    """angle_from_time(t, law) -> the polar angle theta with
time_from_angle(theta, law) = t. The revolution containing t is found from the
period, the angle within it by Brent's method, and the result polished with two
Newton steps."""
    T = law.period()
    n = math.floor(t / T)
    target = min(max(t * law.rate - n * law.period_integral, 0.0), law.period_integral)
    def residual(phi: float) -> float:
        return antiderivative_continuous(phi, law.eps) - target
    phi = optimize.brentq(residual, 0.0, 2 * math.pi, xtol = 1e-15, maxiter = 200)
    for _ in range(2):
        phi -= residual(phi) * (1 - law.eps * math.cos(phi))**2
    return phi + 2 * math.pi * n

def position_from_time(t: float, law: TimeLaw, elements: OrbitElements) -> Vec2:
    """position_from_time(t, law, elements) -> in-plane position at time t of a
planet that passes the apoapsis at t = 0"""
    theta = elements.sense * angle_from_time(t, law) + elements.k
    return position_from_angle(theta, elements)

#---------------
# Speed profile
#---------------

@dataclass(frozen=True)
class SpeedProfile:
    """SpeedProfile: the speed of the planet as a function of polar angle,
scaled by C/p (scale = 1 gives the dimensionless curves)"""
    eps: float
    scale: float # C/p

    def __post_init__(self):
        _check_eps(self.eps)
        if self.scale <= 0:
            raise DomainError(f'speed scale must be positive (scale = {self.scale})')

    @staticmethod
    def from_elements(elements: OrbitElements) -> 'SpeedProfile':
        return SpeedProfile(eps = elements.eps, scale = abs(elements.C) / elements.p)

def speed_from_angle(theta: float, profile: SpeedProfile) -> float:
    """speed_from_angle(theta, profile) -> |v| at polar angle theta (measured
from the apoapsis):

    sqrt((eps sin theta/(1 - eps cos theta))^2 + 1) (1 - eps cos theta) C/p

The slowest point is the apoapsis theta = 0, the fastest the periapsis
theta = pi, and their ratio is (1 + eps)/(1 - eps)."""
    q = 1 - profile.eps * math.cos(theta)
    return math.sqrt((profile.eps * math.sin(theta) / q)**2 + 1) * q * profile.scale

def speed_u_form_check(theta: float, elements: OrbitElements) -> float:
    """speed_u_form_check(theta, elements) -> C^2 ((du/dtheta)^2 + u^2), the
squared speed written in u = 1/r = (1 - eps cos(theta - k))/p. Matches
speed_from_angle squared."""
    phi = theta - elements.k
    du = -elements.eps * math.sin(phi) / elements.p
    u = (1 - elements.eps * math.cos(phi)) / elements.p
    return elements.C**2 * (du * du + u * u)

def polar_speed_squared(theta: float, elements: OrbitElements) -> float:
    """polar_speed_squared(theta, elements) -> r'^2 + r^2 theta'^2, the squared
speed from polar kinematics with theta' = C/r^2 and r' from the chain rule"""
    phi = theta - elements.k
    q = 1 - elements.eps * math.cos(phi)
    r = elements.p / q
    theta_dot = elements.C / (r * r)
    r_dot = -elements.p * elements.eps * math.sin(phi) / (q * q) * theta_dot
    return r_dot * r_dot + r * r * theta_dot * theta_dot

def acceleration_from_angle(theta: float, elements: OrbitElements) -> Vec2:
    """acceleration_from_angle(theta, elements) -> acceleration of the planet at
polar angle theta, (-C^2 cos theta/(p r^2), -C^2 sin theta/(p r^2)): directed
at the focus with length C^2/(p r^2) = mu/r^2"""
    r = elements.p / (1 - elements.eps * math.cos(theta - elements.k))
    magnitude = elements.central_acceleration(r)
    return Vec2(-magnitude * math.cos(theta), -magnitude * math.sin(theta))
