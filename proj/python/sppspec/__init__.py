"""Band spectra of one-dimensional periodic Dirac/Hill operators via
spectral parameter power series."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
