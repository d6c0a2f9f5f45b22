# unit tests for the kepler.sampling package

import kepler.sampling as sampling
import math
import numpy as np
import scipy.stats
import unittest

class TestAngleSweep(unittest.TestCase):
    """Unit tests for kepler.sampling.AngleSweep"""

    def test_sweep(self):
        sweep = sampling.AngleSweep(0.0, 3 * math.pi, 1000)
        self.assertEqual(1000, len(sweep))
        values = list(sweep)
        self.assertEqual(0.0, values[0])
        self.assertEqual(3 * math.pi, values[-1])
        self.assertTrue(np.allclose(np.diff(values), 3 * math.pi / 999))

    def test_invalid_sweeps(self):
        self.assertRaises(ValueError, sampling.AngleSweep, 0.0, 1.0, 1)
        self.assertRaises(ValueError, sampling.AngleSweep, 1.0, 1.0, 10)
        self.assertRaises(ValueError, sampling.AngleSweep, 2.0, 1.0, 10)

class TestCheckPoints(unittest.TestCase):
    """Unit tests for random and Latin hypercube check points"""

    def setUp(self):
        self.n = 100
        self.spec = sampling.CheckPointSpecification(
            theta = scipy.stats.uniform(-10 * math.pi, 20 * math.pi),
            eps = scipy.stats.uniform(0.0, 0.9),
        )
        self.grid_spec = sampling.CheckPointSpecification(
            theta = scipy.stats.uniform(-10 * math.pi, 20 * math.pi),
            eps = (0.1, 0.3, 0.5, 0.7, 0.9),
        )

    def test_sample(self):
        points = sampling.sample(self.spec, self.n, seed = 1)
        self.assertEqual(self.n, len(points))
        for theta, eps in points:
            self.assertTrue(-10 * math.pi <= theta <= 10 * math.pi)
            self.assertTrue(0 <= eps <= 0.9)

    def test_sample_is_reproducible(self):
        first = sampling.sample(self.spec, self.n, seed = 4)
        second = sampling.sample(self.spec, self.n, seed = 4)
        self.assertTrue(np.array_equal(first.theta, second.theta))
        self.assertTrue(np.array_equal(first.eps, second.eps))

    def test_lhs(self):
        points = sampling.lhs(self.spec, self.n, seed = 2)
        self.assertEqual(self.n, len(points))
        # one sample per stratum of each factor
        strata = np.floor((points.theta + 10 * math.pi) / (20 * math.pi) * self.n)
        self.assertEqual(self.n, len(set(strata.astype(int))))
        strata = np.floor(points.eps / 0.9 * self.n)
        self.assertEqual(self.n, len(set(strata.astype(int))))

    def test_lhs_grid(self):
        points = sampling.lhs(self.grid_spec, self.n, seed = 3)
        grid = set(self.grid_spec.eps)
        counts = {eps: 0 for eps in grid}
        for _, eps in points:
            self.assertTrue(eps in grid)
            counts[eps] += 1
        # a hypercube spreads the samples evenly over the grid
        for count in counts.values():
            self.assertEqual(self.n // len(grid), count)

    def test_lhs_is_reproducible(self):
        first = sampling.lhs(self.spec, self.n, seed = 6)
        second = sampling.lhs(self.spec, self.n, seed = 6)
        self.assertTrue(np.array_equal(first.theta, second.theta))

    def test_lhs_keeps_global_random_state(self):
        np.random.seed(11)
        expected = np.random.uniform(size = 5)
        np.random.seed(11)
        sampling.lhs(self.spec, self.n, seed = 6)
        self.assertTrue(np.array_equal(expected, np.random.uniform(size = 5)))

if __name__ == '__main__':
    unittest.main()
