"""kepler.sampling - sample points and sweeps for checking analytic results

Random check points are drawn from frozen scipy.stats distributions (the
rv_continuous ones), either directly or through a Latin hypercube, as in
ensemble sampling: the hypercube supplies uniform quantiles and each
distribution's ppf maps them onto its range. An eccentricity can instead come
from a fixed grid, in which case the quantile picks a grid entry.
"""

import numpy as np
import pyDOE
import threading

from dataclasses import dataclass
from math import floor
from typing import Optional, TypeVar

# serializes use of numpy's global random state by pyDOE
_global_rng_lock = threading.Lock()

# this type represents a frozen scipy.stats.rv_continous distribution
RVFrozenDistribution = TypeVar('RVFrozenDistribution')

@dataclass(frozen=True)
class AngleSweep:
    """AngleSweep(a, b, n) - n uniformly-spaced values covering [a, b], both
endpoints included"""
    a: float
    b: float
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError('an angle sweep needs at least 2 samples')
        if not self.b > self.a:
            raise ValueError(f'empty sweep range [{self.a}, {self.b}]')

    def __len__(self) -> int:
        return self.n

    def __iter__(self): # for theta in sweep
        for value in self.values():
            yield float(value)

    def values(self) -> np.ndarray:
        return np.linspace(self.a, self.b, self.n)

@dataclass(frozen=True)
class CheckPointSpecification:
    """CheckPointSpecification: distributions from which (theta, eps) check points
are drawn. eps is either a frozen distribution or a tuple of grid values."""
    theta: RVFrozenDistribution
    eps: RVFrozenDistribution | tuple[float, ...]

@dataclass(frozen=True)
class CheckPoints:
    """CheckPoints: (theta, eps) pairs sampled from a CheckPointSpecification"""
    theta: np.ndarray
    eps: np.ndarray

    def __len__(self) -> int:
        return len(self.theta)

    def __iter__(self): # for theta, eps in points
        for i in range(len(self.theta)):
            yield float(self.theta[i]), float(self.eps[i])

def _eps_from_quantiles(eps, u: np.ndarray) -> np.ndarray:
    if isinstance(eps, tuple):
        n = len(eps)
        return np.array([eps[min(floor(q * n), n - 1)] for q in u])
    return eps.ppf(u)

def sample(specification: CheckPointSpecification, n: int,
           seed: Optional[int] = None) -> CheckPoints:
    """sample(spec, n, [seed]) -> n check points drawn independently"""
    rng = np.random.default_rng(seed)
    return CheckPoints(
        theta = specification.theta.rvs(n, random_state = rng),
        eps = _eps_from_quantiles(specification.eps, rng.uniform(size = n)),
    )

def lhs(specification: CheckPointSpecification,
        n: int,
        seed: Optional[int] = None,
        criterion = None,
        iterations = None) -> CheckPoints:
    """lhs(specification, n, [seed, criterion, iterations]) -> n check points from
latin hypercube sampling of the specification. The optional arguments are passed
along to pyDOE's lhs function. pyDOE draws from numpy's global random state;
when a seed is given that state is seeded for the draw and restored afterwards."""
    with _global_rng_lock:
        saved = np.random.get_state() if seed is not None else None
        try:
            if seed is not None:
                np.random.seed(seed)
            # lhd is a 2D array with indices (sample index, factor index)
            lhd = pyDOE.lhs(2, n, criterion, iterations)
        finally:
            if saved is not None:
                np.random.set_state(saved)
    return CheckPoints(
        theta = specification.theta.ppf(lhd[:, 0]),
        eps = _eps_from_quantiles(specification.eps, lhd[:, 1]),
    )
