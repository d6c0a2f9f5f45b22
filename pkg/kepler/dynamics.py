"""kepler.dynamics - the two-body problem with the Sun fixed at the origin

The planet moves under the inverse-square acceleration -mu s/|s|^3, where
mu = k(m + M) combines the gravitational constant with both masses, so the
Sun's reflex motion never appears. Orbits are propagated with fixed-step
classical Runge-Kutta; step control is up to the caller via dt.

Conic elements follow the sign convention r = p/(1 - eps cos(theta - k)), so
the phase k is the polar angle of the APOAPSIS.
"""

import logging
import math
import numpy as np

from dataclasses import dataclass
from scipy import interpolate, optimize
from scipy.spatial.transform import Rotation
from typing import Optional
from .errors import DegenerateOrbitError, DomainError, SingularityError, \
                    UnboundOrbitError
from .geom import Vec2, Vec3, cross3, ellipse_from_conic, polar_to_cartesian, \
                  polar_velocity

logger = logging.getLogger(__name__)

# distance from the origin below which the force field is considered singular
SINGULARITY_RADIUS = 1e-12

# |r x v| below this fraction of |r||v| counts as radial motion
RADIAL_TOLERANCE = 1e-14

# eccentricities below this are treated as circles (phase k = 0)
CIRCULAR_TOLERANCE = 1e-10

@dataclass(frozen=True)
class BodyState:
    """BodyState: position, velocity and time of the planet"""
    pos: Vec3      # position s(t)
    vel: Vec3      # velocity s'(t)
    t: float = 0.0 # time

    def __post_init__(self):
        if self.pos.norm() < SINGULARITY_RADIUS:
            raise SingularityError(f'planet at the attracting center (|pos| = {self.pos.norm()})')
        if not math.isfinite(self.t):
            raise DomainError(f'state time must be finite (t = {self.t})')

    def as_array(self) -> np.ndarray:
        """state.as_array() -> numpy array (x, y, z, vx, vy, vz)"""
        return np.array([self.pos.x, self.pos.y, self.pos.z,
                         self.vel.x, self.vel.y, self.vel.z])

    @staticmethod
    def from_array(y, t: float = 0.0) -> 'BodyState':
        """BodyState.from_array(y, t) -> state from (x, y, z, vx, vy, vz)"""
        return BodyState(pos = Vec3.from_array(y[:3]), vel = Vec3.from_array(y[3:]), t = t)

@dataclass(frozen=True)
class FirstIntegrals:
    """FirstIntegrals: the conserved quantities of the two-body problem. (A, B, C)
is the angular-momentum vector r x v, normal to the orbital plane; h is the
energy constant v^2 - 2 mu/r."""
    A: float
    B: float
    C: float
    h: float
    mu: float

    def normal(self) -> Vec3:
        return Vec3(self.A, self.B, self.C)

    def is_degenerate(self) -> bool:
        """fi.is_degenerate() -> True for radial motion, (A, B, C) = 0"""
        return self.A == 0 and self.B == 0 and self.C == 0

@dataclass(frozen=True)
class OrbitElements:
    """OrbitElements: the conic r = p/(1 - eps cos(theta - k)) traced by the
planet, together with the dynamical constants that produce it"""
    p: float   # semi-latus rectum C^2/mu
    eps: float # eccentricity sqrt(1 + C^2 h/mu^2)
    k: float   # polar angle of the apoapsis
    mu: float  # gravitational parameter
    C: float   # areal constant r^2 dtheta/dt (signed)
    h: float   # energy constant
    sense: int # +1 counter-clockwise, -1 clockwise

    def __post_init__(self):
        if self.mu <= 0:
            raise DomainError(f'mu must be positive (mu = {self.mu})')
        if self.p <= 0:
            raise DomainError(f'semi-latus rectum must be positive (p = {self.p})')
        if not 0 <= self.eps < 1:
            raise UnboundOrbitError(f'orbit is not an ellipse (eps = {self.eps})')
        if self.sense not in (1, -1):
            raise ValueError(f'sense must be +1 or -1 (got {self.sense})')

    def central_acceleration(self, r: float) -> float:
        """elements.central_acceleration(r) -> C^2/(p r^2), the magnitude of the
acceleration needed to hold the planet on its conic at distance r. Because
p = C^2/mu this is the inverse-square law mu/r^2."""
        return self.C * self.C / (self.p * r * r)

def orbit_elements(p: float, eps: float, mu: float = 1.0,
                   k: float = 0.0, sense: int = 1) -> OrbitElements:
    """orbit_elements(p, eps, [mu, k, sense]) -> OrbitElements of the bound orbit
with the given conic, filling in C = sense*sqrt(mu p) and h = mu(eps^2 - 1)/p"""
    if mu <= 0:
        raise DomainError(f'mu must be positive (mu = {mu})')
    if p <= 0:
        raise DomainError(f'semi-latus rectum must be positive (p = {p})')
    return OrbitElements(
        p = p,
        eps = eps,
        k = k,
        mu = mu,
        C = sense * math.sqrt(mu * p),
        h = mu * (eps * eps - 1) / p,
        sense = sense,
    )

@dataclass(frozen=True)
class Trajectory:
    """Trajectory: states of a propagated orbit at uniform time steps, stored as
numpy arrays. Iterating yields BodyState objects."""
    t: np.ndarray   # times, shape (n,)
    pos: np.ndarray # positions, shape (n, 3)
    vel: np.ndarray # velocities, shape (n, 3)
    dt: float       # time step

    def __post_init__(self):
        if self.dt <= 0:
            raise ValueError('dt must be positive')
        if self.pos.shape != (len(self.t), 3) or self.vel.shape != (len(self.t), 3):
            raise ValueError('trajectory arrays have mismatched shapes')
        if len(self.t) > 1:
            steps = np.diff(self.t)
            if np.any(steps <= 0):
                raise ValueError('trajectory times must be strictly increasing')
            if np.max(np.abs(steps - self.dt)) > 1e-12 * max(1.0, abs(self.t[-1])):
                raise ValueError('trajectory times are not uniformly spaced')

    def __len__(self) -> int:
        return len(self.t)

    def __iter__(self): # for state in trajectory
        for i in range(len(self.t)):
            yield self.member(i)

    def member(self, i: int) -> BodyState:
        """trajectory.member(i) -> BodyState of the ith time step"""
        return BodyState(
            pos = Vec3.from_array(self.pos[i]),
            vel = Vec3.from_array(self.vel[i]),
            t = float(self.t[i]),
        )

#-------------
# Propagation
#-------------

def gravity_accel(pos: Vec3, mu: float) -> Vec3:
    """gravity_accel(pos, mu) -> the inverse-square acceleration -(mu/r^2) s/|s|,
of length mu/|pos|^2 and directed toward the origin"""
    if mu <= 0:
        raise DomainError(f'mu must be positive (mu = {mu})')
    r = pos.norm()
    if r < SINGULARITY_RADIUS:
        raise SingularityError(f'inverse-square force is singular at |pos| = {r}')
    return pos * (-mu / r**3)

def _rates(y: np.ndarray, mu: float) -> np.ndarray:
    """time derivative of the state vector (x, y, z, vx, vy, vz)"""
    r2 = y[0]*y[0] + y[1]*y[1] + y[2]*y[2]
    if r2 < SINGULARITY_RADIUS * SINGULARITY_RADIUS:
        raise SingularityError(f'inverse-square force is singular at |pos| = {math.sqrt(r2)}')
    return np.concatenate((y[3:], y[:3] * (-mu / (r2 * math.sqrt(r2)))))

def _rk4(y: np.ndarray, mu: float, dt: float) -> np.ndarray:
    k1 = _rates(y, mu)
    k2 = _rates(y + 0.5 * dt * k1, mu)
    k3 = _rates(y + 0.5 * dt * k2, mu)
    k4 = _rates(y + dt * k3, mu)
    return y + (dt / 6.0) * (k1 + 2.0 * (k2 + k3) + k4)

def rk4_step(state: BodyState, mu: float, dt: float) -> BodyState:
    """rk4_step(state, mu, dt) -> the state one classical 4th-order Runge-Kutta
step of size dt later"""
    if dt <= 0:
        raise ValueError('dt must be positive')
    if mu <= 0:
        raise DomainError(f'mu must be positive (mu = {mu})')
    return BodyState.from_array(_rk4(state.as_array(), mu, dt), t = state.t + dt)

def propagate(state0: BodyState, mu: float, dt: float, steps: int) -> Trajectory:
    """propagate(state0, mu, dt, steps) -> Trajectory of steps+1 states starting
at state0, advanced with rk4_step. Raises SingularityError if the planet falls
into the origin."""
    if dt <= 0:
        raise ValueError('dt must be positive')
    if steps < 1:
        raise ValueError('steps must be positive')
    if mu <= 0:
        raise DomainError(f'mu must be positive (mu = {mu})')
    logger.info(f'propagating {steps} steps of dt = {dt} (mu = {mu})')
    ys = np.empty((steps + 1, 6))
    ys[0] = state0.as_array()
    for i in range(steps):
        try:
            ys[i+1] = _rk4(ys[i], mu, dt)
        except SingularityError as err:
            raise SingularityError(f'{err} during step {i+1} (t = {state0.t + i*dt})') from err
    logger.info('finished propagation.')
    return Trajectory(
        t = state0.t + dt * np.arange(steps + 1),
        pos = ys[:, :3],
        vel = ys[:, 3:],
        dt = dt,
    )

#-----------------
# First integrals
#-----------------

def first_integrals(state: BodyState, mu: float) -> FirstIntegrals:
    """first_integrals(state, mu) -> FirstIntegrals (A, B, C, h) of a state:
A = y z' - z y', B = z x' - x z', C = x y' - y x', h = |v|^2 - 2 mu/|s|"""
    L = cross3(state.pos, state.vel)
    return FirstIntegrals(
        A = L.x,
        B = L.y,
        C = L.z,
        h = state.vel.dot(state.vel) - 2 * mu / state.pos.norm(),
        mu = mu,
    )

def integrals_along(traj: Trajectory, mu: float) -> np.ndarray:
    """integrals_along(traj, mu) -> array of shape (n, 4) holding (A, B, C, h) for
every state of a trajectory"""
    x, y, z = traj.pos.T
    vx, vy, vz = traj.vel.T
    r = np.sqrt(x*x + y*y + z*z)
    return np.column_stack((
        y*vz - z*vy,
        z*vx - x*vz,
        x*vy - y*vx,
        vx*vx + vy*vy + vz*vz - 2 * mu / r,
    ))

def integral_drift(traj: Trajectory, mu: float) -> dict[str, float]:
    """integral_drift(traj, mu) -> {'A': ..., 'B': ..., 'C': ..., 'h': ...}, the
largest departure of each first integral from its initial value. A, B, C are
measured relative to the initial |(A, B, C)| (so in-plane components that
vanish still get a meaningful scale), h relative to its initial |h|."""
    values = integrals_along(traj, mu)
    initial = values[0]
    momentum = np.linalg.norm(initial[:3])
    scales = [momentum, momentum, momentum, abs(initial[3])]
    drift = {}
    for j, name in enumerate(('A', 'B', 'C', 'h')):
        scale = scales[j] if scales[j] > 0 else 1.0
        drift[name] = float(np.max(np.abs(values[:, j] - initial[j])) / scale)
    return drift

def plane_residual(traj: Trajectory, fi: FirstIntegrals) -> float:
    """plane_residual(traj, fi) -> max over states of |A x + B y + C z| /
(|(A, B, C)| |pos|), the sine of the largest angle between a position and the
plane A x + B y + C z = 0"""
    if fi.is_degenerate():
        raise DegenerateOrbitError('(A, B, C) = 0: radial motion has no orbital plane')
    normal = np.array([fi.A, fi.B, fi.C])
    distances = np.abs(traj.pos @ normal)
    return float(np.max(distances / (np.linalg.norm(normal) * np.linalg.norm(traj.pos, axis = 1))))

#----------
# Elements
#----------

def _plane_rotation(momentum: np.ndarray) -> Optional[Rotation]:
    """rotation taking the angular-momentum vector onto the z axis (keeping the
sign of its z component), or None if it is already there"""
    if momentum[0] == 0 and momentum[1] == 0:
        return None
    target = np.array([0.0, 0.0, 1.0 if momentum[2] >= 0 else -1.0])
    rotation, _ = Rotation.align_vectors([target], [momentum])
    return rotation

def _in_plane(pos: np.ndarray, vel: np.ndarray, rotation: Optional[Rotation]):
    if rotation is None:
        return pos, vel
    return rotation.apply(pos), rotation.apply(vel)

def elements_from_state(state: BodyState, mu: float) -> OrbitElements:
    """elements_from_state(state, mu) -> OrbitElements of the bound orbit through
the given state. Orbits outside the XY plane are first rotated into it along
their angular-momentum vector. Raises DegenerateOrbitError for radial motion and
UnboundOrbitError for parabolic or hyperbolic motion."""
    if mu <= 0:
        raise DomainError(f'mu must be positive (mu = {mu})')
    pos, vel = state.pos.as_array(), state.vel.as_array()
    momentum = np.cross(pos, vel)
    r = np.linalg.norm(pos)
    if np.linalg.norm(momentum) <= RADIAL_TOLERANCE * r * np.linalg.norm(vel):
        raise DegenerateOrbitError('radial motion (C = 0) has no conic elements')
    pos, vel = _in_plane(pos, vel, _plane_rotation(momentum))

    C = float(pos[0] * vel[1] - pos[1] * vel[0])
    h = float(vel @ vel - 2 * mu / r)
    e2 = 1 + C * C * h / (mu * mu)
    if h >= 0 or e2 >= 1:
        raise UnboundOrbitError(f'orbit is not bound (h = {h}, eps^2 = {e2})')
    p = C * C / mu
    eps = math.sqrt(max(e2, 0.0))

    if eps < CIRCULAR_TOLERANCE:
        k = 0.0
    else:
        # phi = theta - k from the conic, with the branch picked by the radial
        # velocity: r decreases from apoapsis (phi = 0) when moving with C
        phi = math.acos(min(1.0, max(-1.0, (1 - p / r) / eps)))
        r_dot = float(pos @ vel) / r
        if r_dot * C > 0:
            phi = -phi
        k = math.remainder(math.atan2(pos[1], pos[0]) - phi, 2 * math.pi)
    return OrbitElements(
        p = p,
        eps = eps,
        k = k,
        mu = mu,
        C = C,
        h = h,
        sense = 1 if C > 0 else -1,
    )

def position_from_angle(theta: float, elements: OrbitElements) -> Vec2:
    """position_from_angle(theta, elements) -> in-plane position of the planet at
polar angle theta"""
    r = elements.p / (1 - elements.eps * math.cos(theta - elements.k))
    return polar_to_cartesian(r, theta)

def state_from_elements(elements: OrbitElements, theta: float, t: float = 0.0) -> BodyState:
    """state_from_elements(elements, theta, [t]) -> BodyState in the XY plane at
polar angle theta, moving in the sense of the elements"""
    phi = theta - elements.k
    denom = 1 - elements.eps * math.cos(phi)
    r = elements.p / denom
    theta_dot = elements.C / (r * r)
    r_dot = -elements.p * elements.eps * math.sin(phi) / (denom * denom) * theta_dot
    pos = polar_to_cartesian(r, theta)
    vel = polar_velocity(r, theta, r_dot, theta_dot)
    return BodyState(pos = Vec3(pos.x, pos.y, 0.0), vel = Vec3(vel.x, vel.y, 0.0), t = t)

def semi_major_axis(elements: OrbitElements) -> float:
    return ellipse_from_conic(elements.p, elements.eps).a

def period(elements: OrbitElements) -> float:
    """period(elements) -> T = 2 pi a b/|C|: the ellipse area divided by the
areal velocity |C|/2"""
    g = ellipse_from_conic(elements.p, elements.eps)
    return 2 * math.pi * g.a * g.b / abs(elements.C)

def third_law_constant(elements: OrbitElements) -> float:
    """third_law_constant(elements) -> a^3/T^2, which is mu/(4 pi^2) for every
orbit about the same center"""
    a = semi_major_axis(elements)
    T = period(elements)
    return a**3 / T**2

#---------------------------
# Kepler laws on trajectories
#---------------------------

def in_plane_positions(traj: Trajectory) -> tuple[np.ndarray, np.ndarray]:
    """in_plane_positions(traj) -> (positions, velocities) rotated so that the
initial angular-momentum vector lies along the z axis"""
    momentum = np.cross(traj.pos[0], traj.vel[0])
    return _in_plane(traj.pos, traj.vel, _plane_rotation(momentum))

def areal_constants(traj: Trajectory) -> np.ndarray:
    """areal_constants(traj) -> x y' - y x' for every state, in the orbital plane"""
    pos, vel = in_plane_positions(traj)
    return pos[:, 0] * vel[:, 1] - pos[:, 1] * vel[:, 0]

def radial_residual(traj: Trajectory, mu: float) -> float:
    """radial_residual(traj, mu) -> max over states of
| |pos| - p/(1 - eps cos(theta - k)) | / |pos|, with the elements taken from the
first state"""
    elements = elements_from_state(traj.member(0), mu)
    pos, _ = in_plane_positions(traj)
    r = np.linalg.norm(pos, axis = 1)
    theta = np.arctan2(pos[:, 1], pos[:, 0])
    conic = elements.p / (1 - elements.eps * np.cos(theta - elements.k))
    return float(np.max(np.abs(r - conic) / r))

def measured_period(traj: Trajectory) -> float:
    """measured_period(traj) -> the time the propagated planet takes to sweep a
polar angle of 2 pi about the center, found by cubic Hermite interpolation of
the unwrapped in-plane angle between the two bracketing steps. Raises ValueError
if the trajectory never completes a revolution."""
    pos, vel = in_plane_positions(traj)
    r2 = pos[:, 0]**2 + pos[:, 1]**2
    swept = np.unwrap(np.arctan2(pos[:, 1], pos[:, 0]))
    rate = (pos[:, 0] * vel[:, 1] - pos[:, 1] * vel[:, 0]) / r2
    sense = 1.0 if rate[0] >= 0 else -1.0
    swept = sense * (swept - swept[0])
    rate = sense * rate
    (done,) = np.nonzero(swept >= 2 * math.pi)
    if len(done) == 0:
        raise ValueError(f'trajectory sweeps only {swept.max():.6g} rad, less than one revolution')
    i = int(done[0]) # swept[0] = 0, so i >= 1
    segment = interpolate.CubicHermiteSpline(traj.t[i-1:i+1], swept[i-1:i+1], rate[i-1:i+1])
    t_end = optimize.brentq(lambda t: float(segment(t)) - 2 * math.pi,
                            traj.t[i-1], traj.t[i], xtol = 1e-14, rtol = 1e-15)
    return float(t_end - traj.t[0])
