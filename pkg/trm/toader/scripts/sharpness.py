#!/usr/bin/env python

import logging

from trm import toader
from .runconfig import RunConfig
from .output import emit

__all__ = ['add_sharpness', 'cmd_sharpness', 'FIELDS']

logger = logging.getLogger(__name__)

FIELDS = (
    'kind', 't', 'x_star', 'iterations', 'residual',
    'x_min', 't_min', 'x_max', 't_max', 'lower', 'upper'
)

def add_sharpness(subparsers, common):
    """Registers the 'sharpness' sub-command"""
    parser = subparsers.add_parser(
        'sharpness', parents=[common], description=cmd_sharpness.__doc__,
        help='recover the sharp constants'
    )
    parser.add_argument(
        '--family', choices=tuple(toader.FAMILIES),
        help='family of means to invert [centroidal]'
    )
    parser.set_defaults(func=cmd_sharpness)

def cmd_sharpness(args):
    """sharpness solves M(x) = T(1,t) for the weight x over a grid of ratios
    t from 1e-6 to 1-1e-4, uniform in log(t/(1-t)). The default family is
    J(x), the centroidal mean of (x+(1-x)t, xt+1-x), whose solutions fill
    (lambda, mu); 'contraharmonic' and 'power' (x is then the exponent) are
    the other choices. Rows of kind 'data' hold (t, x_star, iterations,
    residual); a final 'summary' row holds the extreme solutions and the
    closed-form constants 'lower' (t -> 1) and 'upper' (t -> 0).

    """
    config = RunConfig.from_args(args)

    records, summary = toader.scan_sharpness(
        config.grid_points, config.family, config.xtol
    )

    rows = [
        {
            'kind' : 'data', 't' : rec.t, 'x_star' : rec.x_star,
            'iterations' : rec.iterations, 'residual' : rec.residual
        } for rec in records
    ]
    rows.append({'kind' : 'summary', **summary._asdict()})
    emit(config, FIELDS, rows)

    # a clamped solution means T fell outside the family's range
    nclamp = sum(rec.clamped for rec in records)
    if nclamp:
        logger.warning('%d solutions were clamped', nclamp)
        return 1
    return 0
