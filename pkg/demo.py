# This script writes the Theta, time-law and speed curves for the eccentricities
# 0.1, 0.3, 0.5, 0.7 and 0.9, prints the eccentricities of the planets, and
# follows the Earth for one year, comparing the propagated orbit with the
# analytic time law.

import kepler
import logging
import math
import os

# log to the terminal
logging.basicConfig(level = logging.INFO)

# figure families
eccentricities = [0.1, 0.3, 0.5, 0.7, 0.9]
samples = 1000 # per curve

figure_dir = 'figures'
if not os.path.exists(figure_dir):
    os.mkdir(figure_dir)
for format in ('csv', 'svg'):
    kepler.figures.write_figures(eccentricities, samples, format, figure_dir)

# planets and their perihelion/aphelion speed ratios
print(kepler.planets_frame().to_string(index = False))

# the Earth about the Sun in units of AU and years (mu = 4 pi^2), starting
# from aphelion
earth = kepler.load_planets()[2]
mu = 4 * math.pi**2
a = 1.0 # [AU]
elements = kepler.orbit_elements(p = a * (1 - earth.eps) * (1 + earth.eps),
                                 eps = earth.eps, mu = mu)
T = kepler.period(elements) # [yr]
steps = 10000
state0 = kepler.state_from_elements(elements, 0.0)
trajectory = kepler.propagate(state0, mu, T / steps, steps)

drift = kepler.integral_drift(trajectory, mu)
law = kepler.TimeLaw.from_elements(elements)
worst = 0.0
for state in trajectory:
    theta = kepler.angle_from_time(state.t, law)
    worst = max(worst, abs(math.remainder(theta - math.atan2(state.pos.y, state.pos.x), 2 * math.pi)))
print(f'Earth: period {T:.12f} yr, largest drift of the first integrals {max(drift.values()):.3e}')
print(f'Earth: largest difference between propagated and analytic polar angles {worst:.3e} rad')
