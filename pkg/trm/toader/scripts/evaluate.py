#!/usr/bin/env python

from trm.toader.means import MeanKind, PositivePair, evaluate
from trm.toader.core import fmt

__all__ = ['add_eval', 'cmd_eval']

def add_eval(subparsers):
    """Registers the 'eval' sub-command"""
    parser = subparsers.add_parser(
        'eval', description=cmd_eval.__doc__, help='evaluate one mean'
    )

    # positional
    parser.add_argument(
        'mean', help='toader, centroidal, contraharmonic, power:P or j:X'
    )
    parser.add_argument('a', type=float, help='first argument, > 0')
    parser.add_argument('b', type=float, help='second argument, > 0')
    parser.set_defaults(func=cmd_eval)

def cmd_eval(args):
    """eval prints the value of one mean at (a,b) with 17 significant digits.
    Means are toader, centroidal, contraharmonic, power:P (P=0 for the
    geometric mean) and j:X, the centroidal mean of the convex combination
    (xa+(1-x)b, xb+(1-x)a) with X in [1/2,1].

    """
    kind = MeanKind.parse(args.mean)
    pair = PositivePair(args.a, args.b)
    print(fmt(evaluate(kind, pair)))
    return 0
