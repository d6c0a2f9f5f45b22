"""kepler.cli -- command-line front end

    kepler figures --eps <list> [--samples N] [--format csv|svg] [--out DIR]
    kepler propagate --state x,y,z,vx,vy,vz [--mu MU] [--dt DT] [--steps N] [--out FILE]
    kepler check [--eps <list>] [--seed N] [--fail-inject]
    kepler planets [--csv]

Exit codes: 0 success, 1 invariant or physics failure, 2 usage error.
"""

import argparse
import logging
import math
import pandas as pd
import sys

from dataclasses import dataclass
from typing import Optional
from .checks import DEFAULT_EPS, MAX_SUPPORTED_EPS, run_checks
from .dynamics import BodyState, elements_from_state, first_integrals, \
                      integral_drift, integrals_along, period, plane_residual, \
                      propagate
from .errors import KeplerError
from .figures import write_figures
from .solardata import planets_frame

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

COMMANDS = ('figures', 'propagate', 'check', 'planets')

@dataclass(frozen=True)
class RunConfig:
    """RunConfig: the parameters of one kepler command"""
    command: str                                # figures, propagate, check or planets
    eps_list: tuple[float, ...] = DEFAULT_EPS   # eccentricities for figures/check
    samples: int = 1000                         # samples per figure curve
    dt: float = 1e-4                            # propagation time step
    steps: Optional[int] = None                 # propagation steps (None: one period)
    mu: float = 1.0                             # gravitational parameter
    out_dir: str = '.'                          # directory for figure files
    format: str = 'csv'                         # figure format (csv or svg)
    out_file: str = 'trajectory.csv'            # trajectory CSV path
    seed: int = 0                               # seed for random check points
    fail_inject: bool = False                   # perturb the check suite so it fails
    csv: bool = False                           # planets table as CSV

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f'unknown command: {self.command}')
        if self.samples < 2:
            raise ValueError('samples must be at least 2')
        if not self.dt > 0:
            raise ValueError('dt must be positive')
        if self.steps is not None and self.steps < 1:
            raise ValueError('steps must be positive')
        if not self.mu > 0:
            raise ValueError('mu must be positive')
        if self.format not in ('csv', 'svg'):
            raise ValueError(f'unsupported format: {self.format}')
        if not self.eps_list:
            raise ValueError('at least one eccentricity is required')
        for eps in self.eps_list:
            if not 0 <= eps < 1:
                raise ValueError(f'eps = {eps} is not an ellipse eccentricity (need 0 <= eps < 1)')
            if self.command in ('figures', 'check') and eps > MAX_SUPPORTED_EPS:
                raise ValueError(f'eps = {eps} is outside the supported range [0, {MAX_SUPPORTED_EPS}]')

def _float_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(item) for item in text.split(',') if item.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f'not a comma-separated list of numbers: {text}')

def _state(text: str) -> BodyState:
    values = _float_list(text)
    if len(values) != 6:
        raise argparse.ArgumentTypeError(f'state needs 6 components x,y,z,vx,vy,vz (got {len(values)})')
    try:
        return BodyState.from_array(values)
    except KeplerError as err:
        raise argparse.ArgumentTypeError(str(err))

def _fmt(value: float) -> str:
    return f'{value:.17g}'

#----------
# Commands
#----------

def cmd_figures(cfg: RunConfig) -> int:
    """cmd_figures(cfg) -> exit status. Writes theta_density, time_law and speed
curves for every eccentricity in cfg.eps_list into cfg.out_dir."""
    try:
        paths = write_figures(list(cfg.eps_list), cfg.samples, cfg.format, cfg.out_dir)
    except OSError as err:
        print(f'kepler figures: {err}', file = sys.stderr)
        return EXIT_USAGE
    for path in paths:
        print(path)
    return EXIT_SUCCESS

def cmd_propagate(cfg: RunConfig, state0: BodyState) -> int:
    """cmd_propagate(cfg, state0) -> exit status. Propagates state0 (one period
unless cfg.steps is given), writes the trajectory CSV to cfg.out_file and prints
a summary of the recovered elements and the conservation diagnostics."""
    try:
        elements = elements_from_state(state0, cfg.mu)
        T = period(elements)
        steps = cfg.steps if cfg.steps else math.ceil(T / cfg.dt)
        traj = propagate(state0, cfg.mu, cfg.dt, steps)
        drift = integral_drift(traj, cfg.mu)
        residual = plane_residual(traj, first_integrals(state0, cfg.mu))
    except KeplerError as err:
        print(f'kepler propagate: {type(err).__name__}: {err}', file = sys.stderr)
        return EXIT_FAILURE

    integrals = integrals_along(traj, cfg.mu)
    frame = pd.DataFrame({
        't': traj.t,
        'x': traj.pos[:, 0], 'y': traj.pos[:, 1], 'z': traj.pos[:, 2],
        'vx': traj.vel[:, 0], 'vy': traj.vel[:, 1], 'vz': traj.vel[:, 2],
        'A': integrals[:, 0], 'B': integrals[:, 1], 'C': integrals[:, 2], 'h': integrals[:, 3],
    })
    try:
        frame.to_csv(cfg.out_file, index = False, float_format = '%.17g', lineterminator = '\n')
    except OSError as err:
        print(f'kepler propagate: {err}', file = sys.stderr)
        return EXIT_USAGE

    summary = (
        ('p', elements.p),
        ('eps', elements.eps),
        ('k', elements.k),
        ('C', elements.C),
        ('h', elements.h),
        ('sense', elements.sense),
        ('period', T),
        ('steps', steps),
        ('max_drift', max(drift.values())),
        ('plane_residual', residual),
    )
    for name, value in summary:
        print(f'{name:<16}{_fmt(value)}')
    return EXIT_SUCCESS

def cmd_check(cfg: RunConfig) -> int:
    """cmd_check(cfg) -> exit status: 0 iff every invariant group passes"""
    results = run_checks(cfg.eps_list, seed = cfg.seed, fail_inject = cfg.fail_inject)
    for r in results:
        status = 'PASS' if r.passed else 'FAIL'
        print(f'{status}  {r.group:<22} worst={r.worst:.3e}  tolerance={r.tolerance:.1e}')
    return EXIT_SUCCESS if all(r.passed for r in results) else EXIT_FAILURE

def cmd_planets(cfg: RunConfig) -> int:
    """cmd_planets(cfg) -> exit status. Prints the planet table with
eccentricities and perihelion/aphelion speed ratios."""
    frame = planets_frame()
    if cfg.csv:
        sys.stdout.write(frame.to_csv(index = False, float_format = '%.17g', lineterminator = '\n'))
    else:
        print(frame.to_string(index = False, float_format = _fmt))
    return EXIT_SUCCESS

#---------
# Parsing
#---------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog = 'kepler',
        description = "Two-body orbits: Kepler's laws from the inverse-square force and the analytic time law")
    parser.add_argument('-v', '--verbose', action = 'store_true', help = 'log progress messages')
    subparsers = parser.add_subparsers(dest = 'command', required = True)

    figures = subparsers.add_parser('figures', help = 'write Theta, time-law and speed curves')
    figures.add_argument('--eps', type = _float_list, default = DEFAULT_EPS,
                         help = 'comma-separated eccentricities')
    figures.add_argument('--samples', type = int, default = 1000)
    figures.add_argument('--format', choices = ('csv', 'svg'), default = 'csv')
    figures.add_argument('--out', default = '.', help = 'output directory')

    prop = subparsers.add_parser('propagate', help = 'propagate an initial state')
    prop.add_argument('--state', type = _state, required = True,
                      help = 'initial state x,y,z,vx,vy,vz (use --state=... for negative x)')
    prop.add_argument('--mu', type = float, default = 1.0)
    prop.add_argument('--dt', type = float, default = 1e-4)
    prop.add_argument('--steps', type = int, default = None,
                      help = 'number of steps (default: one orbital period)')
    prop.add_argument('--out', default = 'trajectory.csv', help = 'trajectory CSV file')

    check = subparsers.add_parser('check', help = 'run the cross-oracle invariant suite')
    check.add_argument('--eps', type = _float_list, default = DEFAULT_EPS)
    check.add_argument('--seed', type = int, default = 0)
    check.add_argument('--fail-inject', action = 'store_true',
                       help = 'perturb the closed form so the suite must fail')

    planets = subparsers.add_parser('planets', help = 'print the Solar-System eccentricity table')
    planets.add_argument('--csv', action = 'store_true')
    return parser

def config_from_args(args: argparse.Namespace) -> RunConfig:
    """config_from_args(args) -> RunConfig for parsed command-line arguments"""
    fields = {'command': args.command}
    if args.command == 'figures':
        fields.update(eps_list = args.eps, samples = args.samples,
                      format = args.format, out_dir = args.out)
    elif args.command == 'propagate':
        fields.update(mu = args.mu, dt = args.dt, steps = args.steps, out_file = args.out)
    elif args.command == 'check':
        fields.update(eps_list = args.eps, seed = args.seed, fail_inject = args.fail_inject)
    else:
        fields.update(csv = args.csv)
    return RunConfig(**fields)

def main(argv: Optional[list[str]] = None) -> int:
    """main([argv]) -> exit status of the kepler command line"""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level = logging.INFO if args.verbose else logging.WARNING,
                        format = '%(levelname)s %(name)s: %(message)s')
    try:
        cfg = config_from_args(args)
    except ValueError as err:
        print(f'kepler {args.command}: {err}', file = sys.stderr)
        return EXIT_USAGE
    logger.info(f'running {cfg.command}')
    if cfg.command == 'figures':
        return cmd_figures(cfg)
    if cfg.command == 'propagate':
        return cmd_propagate(cfg, args.state)
    if cfg.command == 'check':
        return cmd_check(cfg)
    return cmd_planets(cfg)
