#!/usr/bin/env python

import os
import logging

from trm import toader
from .runconfig import EXAMPLE

__all__ = ['add_config', 'cmd_config']

logger = logging.getLogger(__name__)

def add_config(subparsers):
    """Registers the 'config' sub-command"""
    parser = subparsers.add_parser(
        'config', description=cmd_config.__doc__,
        help='write an example configuration file'
    )

    # positional
    parser.add_argument(
        'cfile', help='configuration file to write, ".cfg" appended if needed'
    )

    # optional
    parser.add_argument(
        '-o', dest='clobber', action='store_true',
        help='overwrite an existing file'
    )
    parser.set_defaults(func=cmd_config)

def cmd_config(args):
    """config writes an example configuration file for use with --config.
    Every entry is set to its default. It will not overwrite an existing
    file unless -o is set.

    """
    fname = toader.acfg(args.cfile)
    if not args.clobber and os.path.exists(fname):
        raise toader.UsageError(
            f'config: {fname} already exists and will not be overwritten'
        )

    with open(fname, 'w', encoding='utf-8') as fout:
        fout.write(
            EXAMPLE.format(
                toader.VERSION, ','.join(toader.INEQUALITIES), toader.MU
            )
        )
    logger.info('written example config file to %s', fname)
    return 0
