"""Scripts sub-module of trm.toader holds the 'toader' command and one
module per sub-command (eval, verify, sharpness, plotdata, config).

"""

from .runconfig import *
from .toader import toader
