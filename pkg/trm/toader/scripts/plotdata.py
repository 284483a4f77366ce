#!/usr/bin/env python

import logging
import numpy as np

from trm import toader
from .runconfig import RunConfig
from .output import emit

__all__ = ['add_plotdata', 'cmd_plotdata', 'FIELDS']

logger = logging.getLogger(__name__)

FIELDS = ('kind', 'r', 'f', 'f1', 'f2')

# sampled range of r
RGRID = (1.e-6, 1.-1.e-6)

def add_plotdata(subparsers, common):
    """Registers the 'plotdata' sub-command"""
    parser = subparsers.add_parser(
        'plotdata', parents=[common], description=cmd_plotdata.__doc__,
        help='tabulate f, f1, f2 for plotting'
    )
    parser.add_argument(
        '--p', type=float, help='convex weight in [1/2,1] [mu]'
    )
    parser.set_defaults(func=cmd_plotdata)

def cmd_plotdata(args):
    """plotdata tabulates f(r), f1(r) = r f'(r) and f2(r) = f1'(r)/r for a
    weight p on grid_points values of r evenly spaced from 1e-6 to 1-1e-6,
    ready for external plotting. When the sign changes of f2 and f1 exist,
    rows of kind 'r0' and 'r1' mark them.

    """
    config = RunConfig.from_args(args)
    p = toader.checkp(config.p, 'plotdata')

    rows = []
    for r in np.linspace(RGRID[0], RGRID[1], config.grid_points):
        rows.append({'kind' : 'data', 'r' : r, **toader.f_chain(r, p)._asdict()})

    for kind, finder in (('r0', toader.find_f2_root), ('r1', toader.find_f1_root)):
        try:
            root = finder(p, config.xtol)
        except toader.NoRootError as err:
            logger.info('%s: %s', kind, err)
            continue
        rows.append({'kind' : kind, 'r' : root, **toader.f_chain(root, p)._asdict()})

    emit(config, FIELDS, rows)
    return 0
