"""Exact thermal entanglement of a spin-1 dimer.

Two spin-1 sites coupled by bilinear (J) and biquadratic (K) exchange in a
magnetic field B:

    H = J (S1 . S2) + K (S1 . S2)^2 + B (S1z + S2z)

The model diagonalizes in closed form into nine levels with a fixed
eigenbasis, which makes the Gibbs state, its partition function, and the
negativity of the thermal state exact and cheap.  The ``analysis`` module
maps out where the thermal state is entangled: the critical field
B_c = (3/2)(J - K), a zero-field existence bound in K, threshold
temperatures, and dense parameter sweeps.  A small CLI (``spindimer``)
exposes all of it and emits CSV or JSON.
"""

__version__ = "0.1.0"

from .analysis import (
    ZERO_NEGATIVITY_THRESHOLD,
    AxisSpec,
    InvalidAxisError,
    NeverEntangledError,
    NoRootError,
    SweepGrid,
    ThresholdResult,
    critical_field,
    existence_bound_K,
    sweep,
    threshold_temperature_numeric,
    threshold_temperature_zero_field,
)
from .entanglement import (
    InvalidStateError,
    NegativityResult,
    negativity,
    negativity_at,
)
from .linalg import (
    DimensionMismatchError,
    NoConvergenceError,
    NotHermitianError,
    Spectrum,
    hermitian_eig,
    is_hermitian,
    kron,
    partial_transpose_a,
    trace_norm_hermitian,
)
from .model import (
    AnalyticSpectrum,
    EnergyLevel,
    HubbardParams,
    ModelParams,
    ZeroRepulsionError,
    analytic_spectrum,
    build_hamiltonian,
    couplings_from_hubbard,
    ground_state,
    level_energies,
    spin1_operators,
)
from .thermal import (
    NonpositiveTemperatureError,
    boltzmann_weights,
    gibbs_state,
    gibbs_state_numeric,
    partition_function,
    partition_function_numeric,
)

__all__ = [
    "__version__",
    "ZERO_NEGATIVITY_THRESHOLD",
    "AxisSpec",
    "InvalidAxisError",
    "NeverEntangledError",
    "NoRootError",
    "SweepGrid",
    "ThresholdResult",
    "critical_field",
    "existence_bound_K",
    "sweep",
    "threshold_temperature_numeric",
    "threshold_temperature_zero_field",
    "InvalidStateError",
    "NegativityResult",
    "negativity",
    "negativity_at",
    "DimensionMismatchError",
    "NoConvergenceError",
    "NotHermitianError",
    "Spectrum",
    "hermitian_eig",
    "is_hermitian",
    "kron",
    "partial_transpose_a",
    "trace_norm_hermitian",
    "AnalyticSpectrum",
    "EnergyLevel",
    "HubbardParams",
    "ModelParams",
    "ZeroRepulsionError",
    "analytic_spectrum",
    "build_hamiltonian",
    "couplings_from_hubbard",
    "ground_state",
    "level_energies",
    "spin1_operators",
    "NonpositiveTemperatureError",
    "boltzmann_weights",
    "gibbs_state",
    "gibbs_state_numeric",
    "partition_function",
    "partition_function_numeric",
]
