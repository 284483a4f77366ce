# namespace package shared by the trm.* distributions
from pkgutil import extend_path
__path__ = extend_path(__path__, __name__)
