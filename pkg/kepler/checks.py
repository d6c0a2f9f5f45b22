"""kepler.checks - cross-oracle invariant suite

Each check group measures the worst-case error of one family of results
against an independent oracle (quadrature, finite differences, numerical
propagation, three-point circles) and compares it with a fixed tolerance.
run_checks evaluates all groups and returns one CheckResult per group.
"""

import logging
import math
import numpy as np
import scipy.stats

from dataclasses import dataclass
from typing import Callable, Optional
from .analytic import SpeedProfile, TimeLaw, acceleration_from_angle, \
                      angle_from_time, antiderivative_continuous, \
                      position_from_time, quadrature_oracle, speed_from_angle, \
                      theta_density, time_from_angle
from .dynamics import Trajectory, areal_constants, in_plane_positions, \
                      integral_drift, measured_period, orbit_elements, \
                      period, propagate, radial_residual, semi_major_axis, \
                      state_from_elements, OrbitElements
from .errors import KeplerError
from .figures import figure_curves
from .geom import Vec2, Vec3, circular_motion, circumradius, cross3, \
                  curvature_radius, ellipse_from_axes, ellipse_from_conic, \
                  ellipse_point, polar_radius, polar_to_cartesian
from .runners import PoolRunner
from .sampling import CheckPointSpecification, lhs, sample
from .solardata import load_planets

logger = logging.getLogger(__name__)

# eccentricities of the published figure families
DEFAULT_EPS = (0.1, 0.3, 0.5, 0.7, 0.9)

# largest eccentricity accepted by the figures and check commands
MAX_SUPPORTED_EPS = 0.99

# perturbation added to the closed form when a fault is injected
INJECTED_FAULT = 1e-6

@dataclass(frozen=True)
class CheckResult:
    """CheckResult: the outcome of one invariant group"""
    group: str
    worst: float     # worst measured error
    tolerance: float # documented tolerance
    passed: bool

def _result(group: str, worst: float, tolerance: float) -> CheckResult:
    worst = float(worst)
    return CheckResult(group = group, worst = worst, tolerance = tolerance,
                       passed = math.isfinite(worst) and worst <= tolerance)

@dataclass(frozen=True)
class ReferenceOrbit:
    """ReferenceOrbit: the a = 5, eps = 0.8, mu = 1 orbit propagated for one
period from its apoapsis at dt = 1e-4 T"""
    elements: OrbitElements
    trajectory: Trajectory
    T: float

def reference_orbit(a: float = 5.0, eps: float = 0.8, mu: float = 1.0,
                    steps: int = 10000) -> ReferenceOrbit:
    """reference_orbit([a, eps, mu, steps]) -> ReferenceOrbit propagated over one
period in the given number of steps"""
    elements = orbit_elements(p = a * (1 - eps) * (1 + eps), eps = eps, mu = mu)
    T = period(elements)
    trajectory = propagate(state_from_elements(elements, 0.0), mu, T / steps, steps)
    return ReferenceOrbit(elements = elements, trajectory = trajectory, T = T)

@dataclass(frozen=True)
class CheckContext:
    """CheckContext: inputs shared by all check groups"""
    eps_list: tuple[float, ...]
    seed: int
    fail_inject: bool
    reference: ReferenceOrbit

#----------
# Geometry
#----------

def check_ellipse_round_trip(ctx: CheckContext) -> CheckResult:
    rng = np.random.default_rng(ctx.seed)
    worst = 0.0
    for _ in range(1000):
        a = rng.uniform(0.1, 10.0)
        b = a * rng.uniform(0.1, 1.0)
        g = ellipse_from_axes(a, b)
        h = ellipse_from_conic(g.p, g.eps)
        worst = max(worst, abs(h.a - a) / a, abs(h.b - b) / b)
    return _result('ellipse_round_trip', worst, 1e-12)

def check_focal_definition(ctx: CheckContext) -> CheckResult:
    worst = 0.0
    for a, b in ((5.0, 3.0), (2.0, 2.0), (1.0, 0.6), (4.0, 1.0)):
        g = ellipse_from_axes(a, b)
        for i in range(360):
            theta = math.radians(i)
            # the center sits at (f, 0); shift it to the origin
            m = polar_to_cartesian(polar_radius(g.p, g.eps, theta), theta) - Vec2(g.f, 0.0)
            total = (m - Vec2(-g.f, 0.0)).norm() + (m - Vec2(g.f, 0.0)).norm()
            worst = max(worst, abs(total - 2 * a) / (2 * a))
    return _result('focal_definition', worst, 1e-9)

def check_vector_products(ctx: CheckContext) -> CheckResult:
    rng = np.random.default_rng(ctx.seed + 1)
    worst = 0.0
    for _ in range(1000):
        u = Vec3(*rng.uniform(-1, 1, 3))
        v = Vec3(*rng.uniform(-1, 1, 3))
        w = cross3(u, v)
        lagrange = u.dot(u) * v.dot(v) - u.dot(v)**2
        worst = max(worst,
                    abs(w.dot(w) - lagrange) / max(u.dot(u) * v.dot(v), 1e-300),
                    abs(u.dot(w)), abs(v.dot(w)))
    return _result('vector_products', worst, 1e-10)

def check_curvature(ctx: CheckContext) -> CheckResult:
    g = ellipse_from_axes(5.0, 3.0)
    _, v, acc = ellipse_point(g, 0.0)
    R = curvature_radius(v, acc)
    errors = []
    for delta in (1e-2, 2.5e-3, 6.25e-4):
        points = [ellipse_point(g, t)[0] for t in (-delta, 0.0, delta)]
        errors.append(abs(circumradius(*points) - R) / R)
    converging = all(e1 < e0 for e0, e1 in zip(errors[:-1], errors[1:]))
    worst = max(errors[-1], abs(R - g.b**2 / g.a) / R) if converging else math.inf
    return _result('curvature', worst, 1e-5)

def check_curvature_circle(ctx: CheckContext) -> CheckResult:
    worst = 0.0
    for R in (0.5, 1.0, 7.0):
        for omega in (0.3, 1.0, 4.0):
            _, v, acc = circular_motion(R, omega, 0.7)
            worst = max(worst, abs(curvature_radius(v, acc) - R) / R)
    return _result('curvature_circle', worst, 1e-12)

#----------
# Dynamics
#----------

def check_conservation(ctx: CheckContext) -> CheckResult:
    drift = integral_drift(ctx.reference.trajectory, ctx.reference.elements.mu)
    return _result('conservation', max(drift.values()), 1e-6)

def check_kepler_first(ctx: CheckContext) -> CheckResult:
    return _result('kepler_first',
                   radial_residual(ctx.reference.trajectory, ctx.reference.elements.mu),
                   1e-5)

def check_kepler_second(ctx: CheckContext) -> CheckResult:
    areal = areal_constants(ctx.reference.trajectory)
    return _result('kepler_second', np.max(np.abs(areal - areal[0])) / abs(areal[0]), 1e-6)

def check_kepler_third(ctx: CheckContext) -> CheckResult:
    """a^3/T^2 with T measured on propagated orbits, so a force law other than
the inverse square shows up here"""
    mu = 1.0
    constants = []
    try:
        for a, eps in ((1.0, 0.0), (2.5, 0.3), (5.0, 0.8)):
            elements = orbit_elements(p = a * (1 - eps * eps), eps = eps, mu = mu)
            steps = 10000
            dt = period(elements) / steps
            traj = propagate(state_from_elements(elements, 0.0), mu, dt, steps + steps // 50)
            T = measured_period(traj)
            constants.append(semi_major_axis(elements)**3 / T**2)
    except (ValueError, KeplerError) as err:
        logger.warning(f'kepler_third: {err}')
        return _result('kepler_third', math.inf, 1e-6)
    expected = mu / (4 * math.pi**2)
    worst = max(abs(c - expected) / expected for c in constants)
    for i in range(len(constants)):
        for j in range(i + 1, len(constants)):
            worst = max(worst, abs(constants[i] - constants[j]) / expected)
    return _result('kepler_third', worst, 1e-6)

#----------
# Analytic
#----------

def check_closed_form(ctx: CheckContext) -> CheckResult:
    spec = CheckPointSpecification(
        theta = scipy.stats.uniform(-10 * math.pi, 20 * math.pi),
        eps = ctx.eps_list,
    )
    fault = INJECTED_FAULT if ctx.fail_inject else 0.0
    worst = 0.0
    for theta, eps in lhs(spec, 1000, seed = ctx.seed):
        closed = antiderivative_continuous(theta, eps) + fault
        worst = max(worst, abs(closed - quadrature_oracle(theta, eps)))
    return _result('closed_form', worst, 1e-8)

def check_period_identity(ctx: CheckContext) -> CheckResult:
    worst = 0.0
    for eps in ctx.eps_list:
        closed = antiderivative_continuous(2 * math.pi, eps)
        worst = max(worst,
                    abs(closed - quadrature_oracle(2 * math.pi, eps)),
                    abs(closed - 2 * math.pi / (1 - eps * eps)**1.5))
    return _result('period_identity', worst, 1e-9)

def check_fundamental_theorem(ctx: CheckContext) -> CheckResult:
    spec = CheckPointSpecification(
        theta = scipy.stats.uniform(-10 * math.pi, 20 * math.pi),
        eps = scipy.stats.uniform(0.0, 0.9),
    )
    points = list(sample(spec, 490, seed = ctx.seed + 2))
    points += [(math.pi + s * 1e-9, eps) for s in (-1, 1) for eps in (0.1, 0.3, 0.5, 0.7, 0.9)]
    delta = 1e-6
    worst = 0.0
    for theta, eps in points:
        slope = (antiderivative_continuous(theta + delta, eps)
                 - antiderivative_continuous(theta - delta, eps)) / (2 * delta)
        worst = max(worst, abs(slope - theta_density(theta, eps)))
    return _result('fundamental_theorem', worst, 1e-6)

def check_inversion(ctx: CheckContext) -> CheckResult:
    worst = 0.0
    for eps in ctx.eps_list:
        law = TimeLaw(eps = eps, rate = 1.0)
        for theta in np.linspace(0.0, 4 * math.pi, 201):
            worst = max(worst, abs(angle_from_time(time_from_angle(theta, law), law) - theta))
    return _result('inversion', worst, 1e-9)

def check_apsidal_ratio(ctx: CheckContext) -> CheckResult:
    worst = 0.0
    grid = np.linspace(0.0, 2 * math.pi, 721)
    for eps in ctx.eps_list:
        profile = SpeedProfile(eps = eps, scale = 1.0)
        ratio = speed_from_angle(math.pi, profile) / speed_from_angle(0.0, profile)
        worst = max(worst, abs(ratio - (1 + eps) / (1 - eps)) / ratio)
        speeds = np.array([speed_from_angle(theta, profile) for theta in grid])
        if eps > 0 and (np.argmin(speeds) not in (0, len(grid) - 1) or np.argmax(speeds) != 360):
            worst = math.inf
    return _result('apsidal_ratio', worst, 1e-10)

def check_acceleration(ctx: CheckContext) -> CheckResult:
    mu = 1.0
    worst = 0.0
    for eps in (0.1, 0.8):
        elements = orbit_elements(p = 1 - eps * eps, eps = eps, mu = mu)
        law = TimeLaw.from_elements(elements)
        T = law.period()
        h = 1e-4 * T
        for t in np.linspace(0.0, T, 100, endpoint = False) + 0.37 * T / 100:
            before, here, after = (position_from_time(s, law, elements) for s in (t - h, t, t + h))
            fd = (after - 2 * here + before) * (1 / (h * h))
            r = here.norm()
            expected = here * (-mu / r**3)
            analytic = acceleration_from_angle(math.atan2(here.y, here.x), elements)
            scale = expected.norm()
            worst = max(worst,
                        (fd - expected).norm() / scale,
                        (analytic - expected).norm() / scale)
    return _result('acceleration', worst, 1e-4)

def check_speed_vs_dynamics(ctx: CheckContext) -> CheckResult:
    elements = ctx.reference.elements
    profile = SpeedProfile.from_elements(elements)
    pos, _ = in_plane_positions(ctx.reference.trajectory)
    worst = 0.0
    for x, y, _ in pos[::10]:
        r = math.hypot(x, y)
        vis_viva = math.sqrt(elements.h + 2 * elements.mu / r)
        speed = speed_from_angle(math.atan2(y, x) - elements.k, profile)
        worst = max(worst, abs(speed - vis_viva) / vis_viva)
    return _result('speed_vs_dynamics', worst, 1e-6)

def check_dynamics_consistency(ctx: CheckContext) -> CheckResult:
    mu = 1.0
    elements = orbit_elements(p = 0.75, eps = 0.5, mu = mu)
    law = TimeLaw.from_elements(elements)
    T = law.period()
    steps = 100000
    traj = propagate(state_from_elements(elements, 0.0), mu, T / steps, steps)
    theta = np.unwrap(np.arctan2(traj.pos[:, 1], traj.pos[:, 0]))
    worst = 0.0
    for i in range(0, steps + 1, 100):
        worst = max(worst, abs(angle_from_time(float(traj.t[i]), law) - theta[i]))
    return _result('dynamics_consistency', worst, 1e-4)

#--------------------
# Data and figures
#--------------------

def check_planets(ctx: CheckContext) -> CheckResult:
    planets = load_planets()
    if len(planets) != 8 or planets[0].name != 'Mercury':
        return _result('planets', math.inf, 0.1)
    if max(p.eps for p in planets) >= 0.21:
        return _result('planets', math.inf, 0.1)
    return _result('planets', max(p.eps for p in planets[1:]), 0.1)

def check_figures(ctx: CheckContext) -> CheckResult:
    worst = 0.0
    samples = 1000
    for eps in ctx.eps_list:
        if eps == 0:
            continue
        density, integral, _ = figure_curves(eps, samples)
        step = density.theta[1] - density.theta[0]
        i_max = int(np.argmax(density.value))
        i_min = int(np.argmin(density.value))
        worst = max(worst,
                    min(abs(density.theta[i_max]), abs(density.theta[i_max] - 2 * math.pi)) / step,
                    abs(density.theta[i_min] - math.pi) / step)
        if np.any(np.diff(integral.value) < 0):
            worst = math.inf
    return _result('figures', worst, 1.0)

CHECK_GROUPS: tuple[Callable[[CheckContext], CheckResult], ...] = (
    check_ellipse_round_trip,
    check_focal_definition,
    check_vector_products,
    check_curvature,
    check_curvature_circle,
    check_conservation,
    check_kepler_first,
    check_kepler_second,
    check_kepler_third,
    check_closed_form,
    check_period_identity,
    check_fundamental_theorem,
    check_inversion,
    check_apsidal_ratio,
    check_acceleration,
    check_speed_vs_dynamics,
    check_dynamics_consistency,
    check_planets,
    check_figures,
)

def run_checks(eps_list: tuple[float, ...] = DEFAULT_EPS,
               seed: int = 0,
               fail_inject: bool = False,
               runner: Optional[PoolRunner] = None) -> list[CheckResult]:
    """run_checks([eps_list, seed, fail_inject, runner]) -> list of CheckResult,
one per invariant group, in a fixed order. With fail_inject the closed-form
group is perturbed so that it must fail."""
    for eps in eps_list:
        if not 0 <= eps <= MAX_SUPPORTED_EPS:
            raise ValueError(f'eps = {eps} is outside the supported range [0, {MAX_SUPPORTED_EPS}]')
    ctx = CheckContext(
        eps_list = tuple(eps_list),
        seed = seed,
        fail_inject = fail_inject,
        reference = reference_orbit(),
    )
    runner = runner if runner else PoolRunner(name = 'check')
    results = runner.run(lambda group: group(ctx), list(CHECK_GROUPS))
    for result in results:
        if result.passed:
            logger.info(f'check: {result.group} passed (worst {result.worst:.3g})')
        else:
            logger.warning(f'check: {result.group} FAILED (worst {result.worst:.3g}, tolerance {result.tolerance:.3g})')
    return results
