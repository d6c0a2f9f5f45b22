"""kepler.figures - curve families of the analytic time law, written as CSV or SVG

For each eccentricity three curves are produced:
    * theta_density: Theta(theta) on [0, 3 pi]
    * time_law: the continuous integral I(theta) on [0, 3 pi]
    * speed: the unit-scale speed profile on [0, 2 pi]
"""

import logging
import math
import numpy as np
import os
import pandas as pd

from dataclasses import dataclass
from typing import Optional
from .analytic import SpeedProfile, antiderivative_continuous, \
                      speed_from_angle, theta_density
from .runners import PoolRunner
from .sampling import AngleSweep

logger = logging.getLogger(__name__)

CURVE_NAMES = ('theta_density', 'time_law', 'speed')

# SVG canvas size and margin [px]
SVG_WIDTH = 640
SVG_HEIGHT = 400
SVG_MARGIN = 50

@dataclass(frozen=True)
class Curve:
    """Curve: a sampled curve value(theta) for one eccentricity"""
    name: str         # one of CURVE_NAMES
    eps: float        # eccentricity
    theta: np.ndarray # sample angles
    value: np.ndarray # curve values at the sample angles

    def __post_init__(self):
        if self.name not in CURVE_NAMES:
            raise ValueError(f'unknown curve: {self.name}')
        if self.theta.shape != self.value.shape:
            raise ValueError('curve angles and values have mismatched shapes')

    def filename(self, format: str) -> str:
        """curve.filename(format) -> e.g. 'theta_density_0.3.csv'"""
        return f'{self.name}_{self.eps:g}.{format}'

def figure_curves(eps: float, samples: int) -> list[Curve]:
    """figure_curves(eps, samples) -> [theta_density, time_law, speed] curves for
one eccentricity, each sampled at the given number of uniformly-spaced angles"""
    long_sweep = AngleSweep(0.0, 3 * math.pi, samples)
    revolution = AngleSweep(0.0, 2 * math.pi, samples)
    profile = SpeedProfile(eps = eps, scale = 1.0)
    return [
        Curve(name = 'theta_density', eps = eps,
              theta = long_sweep.values(),
              value = np.array([theta_density(theta, eps) for theta in long_sweep])),
        Curve(name = 'time_law', eps = eps,
              theta = long_sweep.values(),
              value = np.array([antiderivative_continuous(theta, eps) for theta in long_sweep])),
        Curve(name = 'speed', eps = eps,
              theta = revolution.values(),
              value = np.array([speed_from_angle(theta, profile) for theta in revolution])),
    ]

def write_curve_csv(curve: Curve, path: str) -> None:
    """write_curve_csv(curve, path) -> writes a 'theta,value' CSV file with 17
significant digits"""
    frame = pd.DataFrame({'theta': curve.theta, 'value': curve.value})
    frame.to_csv(path, index = False, float_format = '%.17g', lineterminator = '\n')

def render_svg(curve: Curve) -> str:
    """render_svg(curve) -> SVG document with the two axes, the curve as a single
polyline, and its minimum and maximum annotated"""
    lo, hi = float(np.min(curve.value)), float(np.max(curve.value))
    span = hi - lo if hi > lo else 1.0
    t0, t1 = float(curve.theta[0]), float(curve.theta[-1])
    plot_w = SVG_WIDTH - 2 * SVG_MARGIN
    plot_h = SVG_HEIGHT - 2 * SVG_MARGIN
    xs = SVG_MARGIN + (curve.theta - t0) / (t1 - t0) * plot_w
    ys = SVG_HEIGHT - SVG_MARGIN - (curve.value - lo) / span * plot_h
    points = ' '.join(f'{x:.3f},{y:.3f}' for x, y in zip(xs, ys))
    i_min, i_max = int(np.argmin(curve.value)), int(np.argmax(curve.value))
    bottom = SVG_HEIGHT - SVG_MARGIN
    right = SVG_WIDTH - SVG_MARGIN
    return f"""<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}" width="{SVG_WIDTH}" height="{SVG_HEIGHT}">
  <title>{curve.name} eps={curve.eps:g}</title>
  <line class="axis" x1="{SVG_MARGIN}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>
  <line class="axis" x1="{SVG_MARGIN}" y1="{bottom}" x2="{SVG_MARGIN}" y2="{SVG_MARGIN}" stroke="black"/>
  <polyline fill="none" stroke="blue" points="{points}"/>
  <text class="min" x="{SVG_MARGIN}" y="{bottom + 20}" font-size="10">min {lo:.17g} at theta {curve.theta[i_min]:.17g}</text>
  <text class="max" x="{SVG_MARGIN}" y="{SVG_MARGIN - 10}" font-size="10">max {hi:.17g} at theta {curve.theta[i_max]:.17g}</text>
</svg>
"""

def write_curve_svg(curve: Curve, path: str) -> None:
    with open(path, 'w') as f:
        f.write(render_svg(curve))

def write_figures(eps_list: list[float],
                  samples: int,
                  format: str,
                  out_dir: str,
                  runner: Optional[PoolRunner] = None) -> list[str]:
    """write_figures(eps_list, samples, format, out_dir, [runner]) -> list of paths
of the curve files written for every eccentricity (three per eps). The
eccentricities are processed in parallel by the runner. Repeated eccentricities,
or ones sharing a file name, are written once."""
    if format not in ('csv', 'svg'):
        raise ValueError(f'unsupported figure format: {format}')
    if not os.path.isdir(out_dir):
        raise OSError(f'Directory not found: {out_dir}')
    if not os.access(out_dir, os.W_OK):
        raise OSError(f'Directory not writable: {out_dir}')
    writer = write_curve_csv if format == 'csv' else write_curve_svg
    unique = {}
    for eps in eps_list:
        unique.setdefault(f'{eps:g}', eps)

    def job(eps: float) -> list[str]:
        paths = []
        for curve in figure_curves(eps, samples):
            path = os.path.join(out_dir, curve.filename(format))
            writer(curve, path)
            paths.append(path)
        logger.info(f'figures: wrote {len(paths)} curves for eps = {eps:g}')
        return paths

    runner = runner if runner else PoolRunner(name = 'figures')
    return [path for paths in runner.run(job, list(unique.values())) for path in paths]
