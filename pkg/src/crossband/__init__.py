"""Spectral-element eigensolvers for magnetic band functions at
field-crossing points: 1D operator-symbol family, band-function sweeps,
and the 2D crossing-field operator with its small-angle asymptotics.
"""

from .assemble import OperatorMatrices, assemble_1d
from .band import BandGrid, MinResult, degree_study, refine_min, scan
from .cross2d import (
    CrossOperatorSpec,
    EigenResult2D,
    assemble_cross,
    epsilon_ladder,
    epsilon_of_level,
    solve_sparse,
)
from .eigen import EigenResult1D, solve_dense_sym
from .errors import (
    AssemblyError,
    CrossbandError,
    DomainError,
    NumericError,
    ParameterError,
)
from .mesh import SpectralMesh1D, build_mesh
from .symbol import (
    CubicRoots,
    GroundState,
    SymbolParams,
    factor_N,
    fh_gradient,
    ground_state,
    potential,
    region_classify,
    roots,
)

__version__ = "0.1.0"

__all__ = [
    "AssemblyError",
    "BandGrid",
    "CrossOperatorSpec",
    "CrossbandError",
    "CubicRoots",
    "DomainError",
    "EigenResult1D",
    "EigenResult2D",
    "GroundState",
    "MinResult",
    "NumericError",
    "OperatorMatrices",
    "ParameterError",
    "SpectralMesh1D",
    "SymbolParams",
    "assemble_1d",
    "assemble_cross",
    "build_mesh",
    "degree_study",
    "epsilon_ladder",
    "epsilon_of_level",
    "factor_N",
    "fh_gradient",
    "ground_state",
    "potential",
    "refine_min",
    "region_classify",
    "roots",
    "scan",
    "solve_dense_sym",
    "solve_sparse",
]
