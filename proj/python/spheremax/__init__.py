"""Spectral operators, spherical means and variable-exponent norms on periodic grids."""

from ._spheremax import *  # noqa: F401,F403
from ._spheremax import (
    DomainError,
    FormatError,
    MultiplierError,
    NumericalError,
    PreconditionError,
)

__version__ = "0.1.0"
