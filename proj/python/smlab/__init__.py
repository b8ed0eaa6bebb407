"""Generalized spherical means laboratory.

Compiled core: Bessel machinery of complex order, the sphere surface-measure
transform and means multiplier, oscillatory test functions, scaling-exponent
experiments, and the (1/p, Re alpha) boundedness atlas.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc  # noqa: F401

__version__ = "0.1.0"
