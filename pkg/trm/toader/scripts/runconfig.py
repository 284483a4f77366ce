"""
Run configuration shared by the sub-commands: defaults, optional config
file, command-line overrides.
"""

import logging
import argparse
import configparser
from dataclasses import dataclass, fields, replace

from trm import toader

__all__ = ['RunConfig', 'common_parser', 'EXAMPLE']

logger = logging.getLogger(__name__)

# below this a tolerance cannot be met in binary64
ACHIEVABLE = 4*toader.EPS

@dataclass(frozen=True)
class RunConfig:
    """
    Everything a run depends on. Identical configurations give
    byte-identical output.

    Attributes::

      command : str
         sub-command name.

      samples : int
         pairs per inequality in 'verify'.

      seed : int
         generator seed for 'verify'.

      grid_points : int
         points in the 'sharpness' and 'plotdata' grids.

      output_format : str
         'csv' or 'json'.

      output_path : str | None
         output file, None for standard output.

      band : float
         strictness band.

      xtol : float
         bisection tolerance.

      ids : tuple
         inequality ids for 'verify'.

      p : float
         weight for 'plotdata'.

      family : str
         family for 'sharpness'.
    """
    command: str = ''
    samples: int = 100000
    seed: int = 42
    grid_points: int = 200
    output_format: str = 'csv'
    output_path: str = None
    band: float = toader.BAND
    xtol: float = toader.XTOL
    ids: tuple = tuple(toader.INEQUALITIES)
    p: float = toader.MU
    family: str = 'centroidal'

    # config-file key -> (attribute, converter)
    KEYS = {
        'samples' : ('samples', int),
        'seed' : ('seed', int),
        'grid_points' : ('grid_points', int),
        'format' : ('output_format', str),
        'output' : ('output_path', str),
        'band' : ('band', float),
        'xtol' : ('xtol', float),
        'ids' : ('ids', lambda s: tuple(i.strip() for i in s.split(','))),
        'p' : ('p', float),
        'family' : ('family', str),
    }

    @classmethod
    def rcfg(cls, fname, base=None):
        """
        Reads the [main] section of a config file on top of 'base' (the
        defaults if None). The 'version' entry is checked against the
        package version, 'target' must be 'toader'.
        """
        config = configparser.RawConfigParser()
        if not config.read(toader.acfg(fname)):
            raise toader.UsageError(
                f'RunConfig.rcfg: cannot read {toader.acfg(fname)}'
            )
        if not config.has_section('main'):
            raise toader.UsageError(
                f'RunConfig.rcfg: {fname} has no [main] section'
            )

        tver = config.getint('main', 'version', fallback=None)
        if tver != toader.VERSION:
            logger.warning(
                'version in config file = %s conflicts with version of'
                ' package = %d; will continue but there may be problems',
                tver, toader.VERSION
            )

        target = config.get('main', 'target', fallback=None)
        if target != 'toader':
            raise toader.UsageError(
                f'RunConfig.rcfg: found target = {target} but expected'
                ' toader; please check this is the right sort of config file'
            )

        changes = {}
        for key, (attr, conv) in cls.KEYS.items():
            if config.has_option('main', key):
                try:
                    changes[attr] = conv(config.get('main', key))
                except ValueError:
                    raise toader.UsageError(
                        f'RunConfig.rcfg: bad value for {key} in {fname}'
                    ) from None
        return replace(base or cls(), **changes)

    @classmethod
    def from_args(cls, args):
        """
        Builds a RunConfig from parsed arguments: defaults, then the config
        file if --config was given, then every flag that was set.
        """
        config = cls(command=args.command)
        if getattr(args, 'config', None):
            config = cls.rcfg(args.config, config)

        changes = {
            f.name : getattr(args, f.name) for f in fields(cls)
            if f.name != 'command' and getattr(args, f.name, None) is not None
        }
        config = replace(config, **changes)
        config.check()
        return config

    def check(self):
        """
        Rejects impossible values, warns about tolerances tighter than
        binary64 can deliver.
        """
        if self.output_format not in ('csv', 'json'):
            raise toader.UsageError(
                f'RunConfig: format must be csv or json, got {self.output_format!r}'
            )
        if self.samples < 1:
            raise toader.UsageError('RunConfig: samples must be >= 1')
        if self.grid_points < 2:
            raise toader.UsageError('RunConfig: grid_points must be >= 2')
        if not (self.band >= 0. and self.xtol > 0.):
            raise toader.UsageError('RunConfig: band must be >= 0, xtol > 0')
        for name in ('band', 'xtol'):
            if getattr(self, name) < ACHIEVABLE:
                logger.warning(
                    '%s = %g is below the achievable precision %g',
                    name, getattr(self, name), ACHIEVABLE
                )

def common_parser():
    """
    Returns a parent parser with the flags shared by verify, sharpness and
    plotdata. Defaults are None so that config-file values survive unless
    a flag is actually given.
    """
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument(
        '--samples', type=int, help='samples per inequality [100000]'
    )
    parser.add_argument('--seed', type=int, help='generator seed [42]')
    parser.add_argument(
        '--grid-points', dest='grid_points', type=int,
        help='number of grid points [200]'
    )
    parser.add_argument(
        '--format', dest='output_format', choices=('csv', 'json'),
        help='output format [csv]'
    )
    parser.add_argument(
        '--output', dest='output_path', help='output file [standard output]'
    )
    parser.add_argument(
        '--band', type=float, help='strictness band [1e-13]'
    )
    parser.add_argument(
        '--xtol', type=float, help='bisection tolerance [1e-14]'
    )
    parser.add_argument(
        '--config', help='configuration file, see "toader config"'
    )
    return parser

# Example config file
EXAMPLE = """\
# This is an example of a configuration file for the toader command.
# Flags given on the command line override the values set here.
#
# version  : YYYYMMDD version number used to check config file's compatibility
#            with toader. Don't change this.
# target   : what this is meant to configure, to reduce chances of confusion
#            with other configuration files. Don't change this.
# samples  : number of seeded pairs per inequality (verify)
# seed     : seed of the random generator (verify)
# ids      : comma-separated inequality ids (verify)
# grid_points : number of grid points (sharpness, plotdata)
# family   : centroidal, contraharmonic or power (sharpness)
# p        : convex weight in [1/2, 1] (plotdata)
# format   : csv or json
# band     : strictness band
# xtol     : bisection tolerance on the abscissa

[main]
version = {0}
target = toader
samples = 100000
seed = 42
ids = {1}
grid_points = 200
family = centroidal
p = {2!r}
format = csv
band = 1e-13
xtol = 1e-14
"""
