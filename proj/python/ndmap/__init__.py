"""Neumann-to-Dirichlet matrices for the Helmholtz equation on the unit square."""

from ._ndmap import *  # noqa: F401,F403
from ._ndmap import ResonanceError, PreconditionError  # noqa: F401
