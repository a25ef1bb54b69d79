"""Symbolic engine for the exceptional theta correspondences of G2.

The public entry points are re-exported here; see :mod:`g2theta.cli` for
the command-line front end.
"""
import logging

from .chars import ExponentChar, Registry, TorusCharG2
from .config import Settings
from .errors import (G2ThetaError, InvariantViolation, LiteralSyntaxError,
                     NotCoveredError, NotFoundError, PContextError,
                     PreconditionError, RegistryError, UnknownSymbolError)
from .langlands import component_group, packet_of, param_of
from .literals import format_literal, parse_literal, parse_rep_literal
from .reducibility import decompose
from .theta import (LiftResult, dichotomy, discrete_series_target,
                    theta_B_to_G2, theta_D_to_G2, theta_G2_to_P6,
                    theta_P6_to_G2)

__version__ = "0.1.0"

logging.getLogger(__name__).addHandler(logging.NullHandler())
