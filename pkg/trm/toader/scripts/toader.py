#!/usr/bin/env python

import sys
import logging
import argparse

from trm.toader.core import ToaderError, UsageError, DomainError
from .runconfig import common_parser
from .evaluate import add_eval
from .verify import add_verify
from .sharpness import add_sharpness
from .plotdata import add_plotdata
from .makecfg import add_config

logger = logging.getLogger(__name__)

def toader(args=None):
    """toader evaluates the Toader mean T(a,b) and the means it is compared
    with, checks the two-sided bounds by T of centroidal means of convex
    combinations, and recovers the best constants numerically. Use 'toader
    SUB -h' for the options of each sub-command.

    Exit codes: 0 on success, 1 if an inequality was violated or a
    solution had to be clamped, 2 for usage and domain errors.

    """

    parser = argparse.ArgumentParser(
        prog='toader', description=toader.__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter
    )
    parser.add_argument(
        '-v', dest='verbose', action='store_true',
        help='report progress on standard error'
    )

    common = common_parser()
    subparsers = parser.add_subparsers(dest='command', metavar='SUB')
    subparsers.required = True
    add_eval(subparsers)
    add_verify(subparsers, common)
    add_sharpness(subparsers, common)
    add_plotdata(subparsers, common)
    add_config(subparsers)

    # OK, done with arguments. argparse exits with 2 itself on bad flags.
    args = parser.parse_args(args)

    logging.basicConfig(
        stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s',
        level=logging.INFO if args.verbose else logging.WARNING
    )

    try:
        return args.func(args)
    except (UsageError, DomainError) as err:
        logger.error('%s', err)
        return 2
    except ToaderError as err:
        logger.error('%s', err)
        return 1

if __name__ == '__main__':
    sys.exit(toader())
