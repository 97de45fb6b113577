"""Exact motivic Igusa zeta functions of hyperplane arrangements from matroid data."""

from .battery import battery, boolean_arrangement, graphic_arrangement
from .errors import (
    BadPrimeError,
    BudgetExceededError,
    ParseError,
    PreconditionError,
    VerificationError,
    ZetaArrError,
)
from .fan import FlagChain, chains, check_chain_bijection, decode, lattice_points
from .fields import PrimeField, Rationals
from .laurent import LaurentPolyL
from .matroid import Flat, Matroid, boolean_matroid, uniform_matroid
from .oracle import jet_count, verify
from .pointcount import count_points_complement, count_points_milnor, milnor_fiber_counts
from .realization import Arrangement, initial_form
from .zeta import (
    ZetaRational,
    ZetaSeries,
    dl_pointcount_series,
    expand,
    igusa_rational,
    igusa_series,
    normalize,
    rational_equal,
    specialize_L,
)

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BadPrimeError",
    "BudgetExceededError",
    "Flat",
    "FlagChain",
    "LaurentPolyL",
    "Matroid",
    "ParseError",
    "PreconditionError",
    "PrimeField",
    "Rationals",
    "VerificationError",
    "ZetaArrError",
    "ZetaRational",
    "ZetaSeries",
    "battery",
    "boolean_arrangement",
    "boolean_matroid",
    "chains",
    "check_chain_bijection",
    "count_points_complement",
    "count_points_milnor",
    "decode",
    "dl_pointcount_series",
    "expand",
    "graphic_arrangement",
    "igusa_rational",
    "igusa_series",
    "initial_form",
    "jet_count",
    "lattice_points",
    "milnor_fiber_counts",
    "normalize",
    "rational_equal",
    "specialize_L",
    "uniform_matroid",
    "verify",
]
