"""Exact Clifford and spinor algebra on V⊕V*, pure subspaces and frame spin connections."""

from .exact_linalg import Matrix, Scalar, Subspace
from .exterior import Spinor, blade, interior, theta_wedge, wedge
from .clifford import CliffordOp, PhaseVector, clifford_action, frame_vector, metric, spinor_inner
from .pure import IsotropicSubspace, SpinorSubspace, annihilator, is_pure, pure_subspace
from .connection import FrameConnection, SpinorJet

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "Scalar",
    "Subspace",
    "Spinor",
    "blade",
    "interior",
    "theta_wedge",
    "wedge",
    "CliffordOp",
    "PhaseVector",
    "clifford_action",
    "frame_vector",
    "metric",
    "spinor_inner",
    "IsotropicSubspace",
    "SpinorSubspace",
    "annihilator",
    "is_pure",
    "pure_subspace",
    "FrameConnection",
    "SpinorJet",
]
