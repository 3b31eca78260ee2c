"""Magnus expansion on planar trees, permutations and matrix paths.

Thin Python layer over the C++ core. Everything exact-arithmetic returns
fractions.Fraction; trees travel as canonical bracket strings.
"""

from magnusforest._core import *  # noqa: F401,F403
from magnusforest._core import __all__  # noqa: F401

__version__ = "0.1.0"
