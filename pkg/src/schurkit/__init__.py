"""Exact symmetric functions: partitions, tableaux, Schur polynomials and the ring of symmetric functions."""

from . import polynomials, shapes, symfunc, tableaux
from .kernels import BACKEND
from .polynomials import *  # noqa: F401,F403
from .shapes import *  # noqa: F401,F403
from .symfunc import *  # noqa: F401,F403
from .tableaux import *  # noqa: F401,F403

__version__ = "0.1.0"

__all__ = (
    ["BACKEND", "__version__"]
    + shapes.__all__
    + tableaux.__all__
    + polynomials.__all__
    + symfunc.__all__
)
