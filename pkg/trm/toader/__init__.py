"""
Toader mean

Complete elliptic integrals by the arithmetic-geometric mean, the Toader
mean T(a,b) = (2/pi) int_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2) and the
centroidal, contraharmonic and power means that bound it, plus the
numerical machinery that checks those bounds and recovers their best
constants.
"""

from .core import *
from .quad import *
from .elliptic import *
from .means import *
from .analysis import *
from . import scripts

__all__ = [
    'Modulus', 'EllipticValues', 'PositivePair', 'MeanKind',
    'ellipk', 'ellipe', 'ellip_pair', 'ellip_oracle',
    'toader', 'centroidal', 'contraharmonic', 'power_mean', 'j_mean',
    'f_chain', 'find_f2_root', 'find_f1_root', 'solve_sharpness',
    'verify_inequality', 'find_counterexample',
    'ToaderError', 'DomainError', 'DegenerateInputError', 'DivergenceError',
    'ConvergenceError', 'NoRootError', 'UsageError', 'InternalError',
]
