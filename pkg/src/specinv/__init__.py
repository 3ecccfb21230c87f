"""Geometric spectral inversion for one-dimensional Schrodinger operators.

Given the ground-state energy F(v) of -d^2/dx^2 + v f(x) for a range of
couplings v, build the kinetic potential fbar(s) and the pointwise upper
bound A(x) = fbar(1/(4x^2)) >= f(x), valid when f(x) = g(x^2) with g
increasing and convex.
"""

__version__ = "0.1.0"

from .eigensolver import GroundState, SolverConfig, concentration_curve, expectation_profile, ground_state
from .errors import BoundaryWarning, DataQualityError, NumericalError, RangeError
from .inversion import (
    ReconstructionCurve,
    coverage_window,
    envelope_energy_bound,
    envelope_kinetic,
    reconstruct_upper,
    semiclassical_energy,
)
from .potential import (
    ConvexTransform,
    OscBarrier,
    PotentialShape,
    Power,
    Tabulated,
    ValidationReport,
    evaluate,
    parse_shape,
    validate_transform,
)
from .trajectory import (
    EnergyTrajectory,
    KineticPotentialCurve,
    convexity_identity_residual,
    default_coupling_grid,
    sample_trajectory,
    to_kinetic_potential,
)

__all__ = [
    "BoundaryWarning", "ConvexTransform", "DataQualityError", "EnergyTrajectory", "GroundState",
    "KineticPotentialCurve", "NumericalError", "OscBarrier", "PotentialShape", "Power", "RangeError",
    "ReconstructionCurve", "SolverConfig", "Tabulated", "ValidationReport", "concentration_curve",
    "convexity_identity_residual", "coverage_window", "default_coupling_grid", "envelope_energy_bound",
    "envelope_kinetic", "evaluate", "expectation_profile", "ground_state", "parse_shape",
    "reconstruct_upper", "sample_trajectory", "semiclassical_energy", "to_kinetic_potential",
    "validate_transform",
]
