#!/usr/bin/env python

import logging

from trm import toader
from .runconfig import RunConfig
from .output import emit

__all__ = ['add_verify', 'cmd_verify', 'FIELDS']

logger = logging.getLogger(__name__)

FIELDS = (
    'inequality_id', 'samples', 'seed', 'violations', 'inconclusive',
    'min_margin', 'worst_a', 'worst_b'
)

def add_verify(subparsers, common):
    """Registers the 'verify' sub-command"""
    parser = subparsers.add_parser(
        'verify', parents=[common], description=cmd_verify.__doc__,
        help='sweep inequalities over seeded random pairs'
    )
    parser.add_argument(
        '--ids', type=lambda s: tuple(i.strip() for i in s.split(',')),
        help='comma-separated inequality ids [all of: {}]'.format(
            ', '.join(toader.INEQUALITIES))
    )
    parser.set_defaults(func=cmd_verify)

def cmd_verify(args):
    """verify tests strict inequalities between the Toader mean and its
    bounds on seeded pseudo-random pairs (1,t), log t uniform on
    [ln 1e-8, ln(1-1e-8)]. One row per inequality. The exit code is 0 if no
    inequality has a violation beyond the strictness band, 1 otherwise.

    """
    config = RunConfig.from_args(args)

    # check every id before spending any time
    for ineq_id in config.ids:
        if ineq_id not in toader.INEQUALITIES:
            raise toader.UsageError(
                f'verify: unknown inequality {ineq_id!r}, expected one of'
                f' {", ".join(toader.INEQUALITIES)}'
            )

    rows, failed = [], False
    for ineq_id in config.ids:
        report = toader.verify_inequality(
            ineq_id, config.samples, config.seed, config.band
        )
        if report.violations:
            logger.warning(
                '%s: %d violations, worst margin %g at %r', ineq_id,
                report.violations, report.min_margin, report.worst_pair
            )
            failed = True
        rows.append({
            'inequality_id' : report.inequality_id,
            'samples' : report.samples,
            'seed' : report.seed,
            'violations' : report.violations,
            'inconclusive' : report.inconclusive,
            'min_margin' : report.min_margin,
            'worst_a' : report.worst_pair.a,
            'worst_b' : report.worst_pair.b,
        })

    emit(config, FIELDS, rows)
    return 1 if failed else 0
