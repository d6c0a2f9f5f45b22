# unit tests for the kepler.analytic package

import kepler.analytic as analytic
import kepler.dynamics as dynamics
from kepler.errors import DomainError, PoleError
from kepler.geom import Vec2
import math
import numpy as np
import unittest

class TestDensity(unittest.TestCase):
    """Unit tests for the angular density and rate"""

    def test_theta_density(self):
        for theta in (0.0, 1.0, 4.0):
            self.assertEqual(1.0, analytic.theta_density(theta, 0.0))
        self.assertTrue(abs(analytic.theta_density(0, 0.9) - 100) < 1e-11)
        self.assertTrue(abs(analytic.theta_density(math.pi, 0.5) - 4/9) < 1e-15)
        self.assertRaises(DomainError, analytic.theta_density, 0.0, 1.0)
        self.assertRaises(DomainError, analytic.theta_density, 0.0, -0.1)

    def test_theta_rate(self):
        for eps in (0.0, 0.5, 0.9):
            self.assertTrue(abs(analytic.theta_rate(math.pi/2, eps, 1, 1) - 1) < 1e-15)
        self.assertTrue(abs(analytic.theta_rate(0, 0.8, 1, 1) - 0.04) < 1e-15)
        self.assertTrue(analytic.theta_rate(1.0, 0.3, -2, 1) < 0)
        self.assertRaises(DomainError, analytic.theta_rate, 0.0, 0.5, 1, 0)

class TestAntiderivative(unittest.TestCase):
    """Unit tests for the closed-form integral of the angular density"""

    def test_raw(self):
        self.assertEqual(0.0, analytic.antiderivative_raw(0, 0.3))
        value = analytic.antiderivative_raw(math.pi/2, 0.3)
        self.assertTrue(abs(value - analytic.quadrature_oracle(math.pi/2, 0.3)) < 1e-9)

    def test_raw_jumps_by_one_period(self):
        raw = analytic.antiderivative_raw(3 * math.pi/2, 0.3)
        jump = analytic.quadrature_oracle(3 * math.pi/2, 0.3) - raw
        self.assertTrue(abs(jump - analytic.period_integral(0.3)) < 1e-9)

    def test_raw_domain(self):
        self.assertRaises(DomainError, analytic.antiderivative_raw, 1.0, 0.0)
        self.assertRaises(DomainError, analytic.antiderivative_raw, 1.0, 1.0)
        self.assertRaises(PoleError, analytic.antiderivative_raw, math.pi, 0.5)
        self.assertRaises(PoleError, analytic.antiderivative_raw, -3 * math.pi, 0.5)

    def test_period_integral(self):
        self.assertEqual(2 * math.pi, analytic.period_integral(0))
        for eps in (0.1, 0.5, 0.9, 0.99):
            expected = 2 * math.pi / (1 - eps * eps)**1.5
            self.assertTrue(abs(analytic.period_integral(eps) - expected) < 1e-12 * expected)

    def test_continuous(self):
        self.assertEqual(2 * math.pi, analytic.antiderivative_continuous(2 * math.pi, 0))
        self.assertEqual(0.0, analytic.antiderivative_continuous(0.0, 0.7))
        for eps in (0.1, 0.5, 0.9):
            value = analytic.antiderivative_continuous(2 * math.pi, eps)
            self.assertTrue(abs(value - 2 * math.pi / (1 - eps * eps)**1.5) < 1e-9)
            self.assertTrue(abs(value - analytic.quadrature_oracle(2 * math.pi, eps)) < 1e-9)

    def test_matches_quadrature(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            theta = rng.uniform(-10 * math.pi, 10 * math.pi)
            eps = rng.choice((0.1, 0.3, 0.5, 0.7, 0.9))
            closed = analytic.antiderivative_continuous(theta, eps)
            self.assertTrue(abs(closed - analytic.quadrature_oracle(theta, eps)) < 1e-8)

    def test_continuous_at_poles(self):
        eps = 0.6
        half = analytic.period_integral(eps) / 2
        for n in (-3, -1, 1, 3, 5):
            theta = n * math.pi
            at_pole = analytic.antiderivative_continuous(theta, eps)
            self.assertTrue(abs(at_pole - n * half) < 1e-9 * max(1, abs(n)))
            below = analytic.antiderivative_continuous(theta - 1e-9, eps)
            above = analytic.antiderivative_continuous(theta + 1e-9, eps)
            self.assertTrue(below < at_pole < above)
            self.assertTrue(above - below < 1e-6)

    def test_increasing_and_periodic(self):
        for eps in (0.2, 0.8):
            values = [analytic.antiderivative_continuous(theta, eps)
                      for theta in np.linspace(-4 * math.pi, 4 * math.pi, 2001)]
            self.assertTrue(np.all(np.diff(values) > 0))
            period = analytic.period_integral(eps)
            for theta in (-5.0, -0.3, 1.0, 3.0, 9.0):
                step = (analytic.antiderivative_continuous(theta + 2 * math.pi, eps)
                        - analytic.antiderivative_continuous(theta, eps))
                self.assertTrue(abs(step - period) < 1e-10 * period)

    def test_odd(self):
        for theta in (0.4, 2.0, 7.5):
            self.assertTrue(abs(analytic.antiderivative_continuous(-theta, 0.4)
                                + analytic.antiderivative_continuous(theta, 0.4)) < 1e-12)

    def test_fundamental_theorem(self):
        delta = 1e-6
        for eps in (0.1, 0.5, 0.9):
            for theta in (-7.0, 0.0, 1.3, math.pi - 1e-9, math.pi + 1e-9, 12.0):
                slope = (analytic.antiderivative_continuous(theta + delta, eps)
                         - analytic.antiderivative_continuous(theta - delta, eps)) / (2 * delta)
                self.assertTrue(abs(slope - analytic.theta_density(theta, eps)) < 1e-6)

class TestQuadrature(unittest.TestCase):
    """Unit tests for the quadrature oracle"""

    def test_empty_interval(self):
        self.assertEqual(0.0, analytic.quadrature_oracle(0, 0.5))

    def test_full_revolution(self):
        value = analytic.quadrature_oracle(2 * math.pi, 0.5)
        self.assertTrue(abs(value - 2 * math.pi / 0.75**1.5) < 1e-10)

    def test_odd_symmetry(self):
        for theta in (0.5, 4.0, 20.0):
            self.assertTrue(abs(analytic.quadrature_oracle(-theta, 0.7)
                                + analytic.quadrature_oracle(theta, 0.7)) < 1e-10)

    def test_circle(self):
        self.assertTrue(abs(analytic.quadrature_oracle(5.0, 0.0) - 5.0) < 1e-12)

class TestTimeLaw(unittest.TestCase):
    """Unit tests for time as a function of polar angle and its inverse"""

    def setUp(self):
        self.elements = dynamics.orbit_elements(p = 1.8, eps = 0.8)
        self.law = analytic.TimeLaw.from_elements(self.elements)
        self.T = dynamics.period(self.elements)

    def test_law(self):
        self.assertTrue(abs(self.law.rate - math.sqrt(1.8) / 1.8**2) < 1e-15)
        self.assertTrue(abs(self.law.period_integral - analytic.period_integral(0.8)) < 1e-15)
        self.assertTrue(abs(self.law.period() - self.T) < 1e-6 * self.T)
        self.assertRaises(DomainError, analytic.TimeLaw, 0.5, 0.0)
        self.assertRaises(DomainError, analytic.TimeLaw, 1.0, 1.0)

    def test_time_from_angle(self):
        self.assertEqual(0.0, analytic.time_from_angle(0, self.law))
        self.assertTrue(abs(analytic.time_from_angle(2 * math.pi, self.law) - self.T) < 1e-6 * self.T)
        self.assertTrue(abs(analytic.time_from_angle(math.pi, self.law) - self.T / 2) < 1e-9 * self.T)

    def test_angle_from_time(self):
        self.assertTrue(abs(analytic.angle_from_time(0, self.law)) < 1e-12)
        self.assertTrue(abs(analytic.angle_from_time(self.T / 2, self.law) - math.pi) < 1e-9)
        quarter = analytic.angle_from_time(self.T / 4, self.law)
        self.assertTrue(quarter < math.pi / 2)
        self.assertTrue(analytic.quadrature_oracle(math.pi / 2, 0.8) > self.law.period_integral / 4)

    def test_inversion(self):
        for eps in (0.0, 0.3, 0.9):
            law = analytic.TimeLaw(eps = eps, rate = 1.0)
            for theta in np.linspace(0, 4 * math.pi, 41):
                t = analytic.time_from_angle(theta, law)
                self.assertTrue(abs(analytic.angle_from_time(t, law) - theta) < 1e-9)

    def test_negative_time(self):
        law = analytic.TimeLaw(eps = 0.5, rate = 2.0)
        for theta in (-0.5, -3.0, -9.0):
            t = analytic.time_from_angle(theta, law)
            self.assertTrue(t < 0)
            self.assertTrue(abs(analytic.angle_from_time(t, law) - theta) < 1e-9)

    def test_position_from_time(self):
        start = analytic.position_from_time(0, self.law, self.elements)
        self.assertTrue(abs(start.x - 9) < 1e-12 and abs(start.y) < 1e-12)
        half = analytic.position_from_time(self.T / 2, self.law, self.elements)
        self.assertTrue(abs(half.x + 1) < 1e-8 and abs(half.y) < 1e-8)
        quarter = analytic.position_from_time(self.T / 4, self.law, self.elements)
        self.assertTrue(quarter.y > 0)

    def test_position_from_time_clockwise(self):
        elements = dynamics.orbit_elements(p = 1.8, eps = 0.8, sense = -1)
        law = analytic.TimeLaw.from_elements(elements)
        quarter = analytic.position_from_time(self.T / 4, law, elements)
        self.assertTrue(quarter.y < 0)

class TestSpeed(unittest.TestCase):
    """Unit tests for speed and acceleration as functions of polar angle"""

    def test_circle(self):
        profile = analytic.SpeedProfile(eps = 0, scale = 1)
        for theta in (0.0, 1.0, 3.0):
            self.assertEqual(1.0, analytic.speed_from_angle(theta, profile))

    def test_apsidal_ratio(self):
        for eps in (0.1, 0.3, 0.5, 0.7, 0.8, 0.9):
            profile = analytic.SpeedProfile(eps = eps, scale = 1)
            ratio = analytic.speed_from_angle(math.pi, profile) / analytic.speed_from_angle(0, profile)
            self.assertTrue(abs(ratio - (1 + eps) / (1 - eps)) < 1e-10 * ratio)
        half = analytic.SpeedProfile(eps = 0.5, scale = 1)
        ratio = analytic.speed_from_angle(math.pi, half) / analytic.speed_from_angle(0, half)
        self.assertTrue(abs(ratio - 3) < 1e-14)

    def test_profile_domain(self):
        self.assertRaises(DomainError, analytic.SpeedProfile, 0.5, 0.0)
        self.assertRaises(DomainError, analytic.SpeedProfile, 1.2, 1.0)

    def test_vis_viva(self):
        elements = dynamics.orbit_elements(p = 1.8, eps = 0.8, mu = 1.5)
        profile = analytic.SpeedProfile.from_elements(elements)
        for theta in np.linspace(0, 2 * math.pi, 37):
            r = elements.p / (1 - elements.eps * math.cos(theta))
            vis_viva = math.sqrt(elements.h + 2 * elements.mu / r)
            speed = analytic.speed_from_angle(theta, profile)
            self.assertTrue(abs(speed - vis_viva) < 1e-12 * vis_viva)

    def test_u_form(self):
        circle = dynamics.orbit_elements(p = 2.0, eps = 0.0)
        self.assertTrue(abs(analytic.speed_u_form_check(1.0, circle) - circle.C**2 / 4) < 1e-15)
        elements = dynamics.orbit_elements(p = 1, eps = 0.3)
        self.assertTrue(abs(analytic.speed_u_form_check(math.pi/2, elements) - 1.09) < 1e-15)

    def test_u_form_matches_polar_kinematics(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            elements = dynamics.orbit_elements(p = rng.uniform(0.5, 3),
                                               eps = rng.uniform(0, 0.95),
                                               mu = rng.uniform(0.5, 2),
                                               k = rng.uniform(-math.pi, math.pi))
            theta = rng.uniform(-math.pi, math.pi)
            u_form = analytic.speed_u_form_check(theta, elements)
            polar = analytic.polar_speed_squared(theta, elements)
            speed = analytic.speed_from_angle(theta - elements.k,
                                              analytic.SpeedProfile.from_elements(elements))
            self.assertTrue(abs(u_form - polar) < 1e-10 * polar)
            self.assertTrue(abs(u_form - speed**2) < 1e-10 * polar)

    def test_acceleration(self):
        circle = dynamics.orbit_elements(p = 1, eps = 0)
        acc = analytic.acceleration_from_angle(0, circle)
        self.assertTrue(abs(acc.x + 1) < 1e-15 and abs(acc.y) < 1e-15)
        elements = dynamics.orbit_elements(p = 1.8, eps = 0.8, mu = 2.5, k = 0.4)
        for theta in (0.0, 1.0, 2.5, 4.0):
            r = elements.p / (1 - elements.eps * math.cos(theta - elements.k))
            acc = analytic.acceleration_from_angle(theta, elements)
            self.assertTrue(abs(acc.norm() - elements.mu / r**2) < 1e-12 * elements.mu / r**2)
            # directed toward the focus
            toward = Vec2(-math.cos(theta), -math.sin(theta))
            self.assertTrue(abs(acc.dot(toward) - acc.norm()) < 1e-12 * acc.norm())

    def test_acceleration_finite_differences(self):
        elements = dynamics.orbit_elements(p = 0.36, eps = 0.8)
        law = analytic.TimeLaw.from_elements(elements)
        T = law.period()
        h = 1e-4 * T
        for t in (0.1 * T, 0.3 * T, 0.45 * T, 0.7 * T):
            before, here, after = (analytic.position_from_time(s, law, elements) for s in (t - h, t, t + h))
            fd = (after - 2 * here + before) * (1 / (h * h))
            acc = analytic.acceleration_from_angle(math.atan2(here.y, here.x), elements)
            self.assertTrue((fd - acc).norm() < 1e-4 * acc.norm())

if __name__ == '__main__':
    unittest.main()
