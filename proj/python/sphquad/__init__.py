"""Quadrature on the unit sphere.

Positive-weight rules (spherical t-designs, equal-area partitions, graded
trapezoidal grids), worst-case errors in Sobolev spaces H^s(S^2), grading
transforms for point-singular integrands, and point-set geometry metrics.
"""

from ._sphquad import *  # noqa: F401,F403
from ._sphquad import __doc__ as _core_doc  # noqa: F401

__version__ = "1.0.0"
