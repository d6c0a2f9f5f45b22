from .errors import KeplerError, DomainError, SingularityError, \
                    DegenerateOrbitError, UnboundOrbitError, \
                    DegenerateCurvatureError, PoleError
from .geom import Vec2, Vec3, cross_z, cross3, EllipseGeometry, \
                  ellipse_from_axes, ellipse_from_conic, ellipse_area, \
                  ellipse_point, polar_radius, polar_to_cartesian, \
                  polar_velocity, circular_motion, curvature_radius, \
                  circumradius, normal_accel_projection
from .dynamics import BodyState, FirstIntegrals, OrbitElements, Trajectory, \
                      orbit_elements, gravity_accel, rk4_step, propagate, \
                      first_integrals, integrals_along, integral_drift, \
                      plane_residual, elements_from_state, position_from_angle, \
                      state_from_elements, semi_major_axis, period, \
                      third_law_constant, measured_period
from .analytic import theta_density, theta_rate, antiderivative_raw, \
                      antiderivative_continuous, period_integral, \
                      quadrature_oracle, TimeLaw, time_from_angle, \
                      angle_from_time, position_from_time, SpeedProfile, \
                      speed_from_angle, speed_u_form_check, polar_speed_squared, \
                      acceleration_from_angle
from .solardata import PlanetRecord, load_planets, planet_speed_ratio, \
                       planet_speed_profile, planets_frame
from .sampling import AngleSweep, CheckPointSpecification, CheckPoints, \
                      sample, lhs
from .runners import PoolRunner
from .checks import CheckResult, run_checks

from . import figures
from . import cli
