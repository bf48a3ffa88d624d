"""Exact c-nilpotent multipliers and capability of nilpotent Lie superalgebras.

Closed forms live in :mod:`supermult.multiplier`; :mod:`supermult.oracle`
recomputes the same numbers from free presentations.
"""

from .exactlin import PreconditionError, StructuralError
from .families import FamilySpec, parse_family
from .freelie import ResourceError
from .multiplier import ClosedFormUnavailable, MultiplierResult, multiplier_closed
from .oracle import is_capable, multiplier_of, multiplier_oracle, present, z_c_star
from .superalg import StructLSA, abelian, direct_sum, heisenberg_even, heisenberg_odd
from .witt import SuperDim

__version__ = "0.1.0"

__all__ = [
    "ClosedFormUnavailable",
    "FamilySpec",
    "MultiplierResult",
    "PreconditionError",
    "ResourceError",
    "StructLSA",
    "StructuralError",
    "SuperDim",
    "abelian",
    "direct_sum",
    "heisenberg_even",
    "heisenberg_odd",
    "is_capable",
    "multiplier_closed",
    "multiplier_of",
    "multiplier_oracle",
    "parse_family",
    "present",
    "z_c_star",
]
