"""Two-particle Dirac-bispinor states under Lorentz boosts.

A numerical laboratory for building bispinor product superpositions,
boosting them in the spinor representation, and tracking how negativity
redistributes across every bipartition of the parity/spin/momentum qubits.
"""

from .dirac import (
    BoostParams,
    FourMomentum,
    bispinor_u,
    bispinor_v,
    boost_bispinor,
    boost_bispinor_matrix,
    boost_four_momentum,
    dirac_hamiltonian,
    helicity_spinor,
    rapidity_from_velocity,
)
from .measures import (
    Bipartition,
    MeanNegativities,
    enumerate_bipartitions,
    linear_entropy,
    mean_negativities,
    negativity,
)
from .momentum_superposition import (
    SixQubitState,
    WignerParams,
    build_superposed,
    boost_superposed,
    project_positive_parity,
    rapidities_for_wigner_angle,
    trace_out_parity,
    wigner_angle,
)
from .scenarios import (
    NegativitySet,
    TwoParticleState,
    apply_boost,
    build_bell_state,
    closed_form_parallel,
    com_framework,
    delta_mean_negativities,
    negativity_set,
    parallel_framework,
)
from .tensor_core import (
    hermitian_eigenvalues,
    kron,
    normalize,
    partial_trace,
    partial_transpose,
)

__version__ = "0.1.0"

__all__ = [
    "BoostParams",
    "FourMomentum",
    "bispinor_u",
    "bispinor_v",
    "boost_bispinor",
    "boost_bispinor_matrix",
    "boost_four_momentum",
    "dirac_hamiltonian",
    "helicity_spinor",
    "rapidity_from_velocity",
    "Bipartition",
    "MeanNegativities",
    "enumerate_bipartitions",
    "linear_entropy",
    "mean_negativities",
    "negativity",
    "SixQubitState",
    "WignerParams",
    "build_superposed",
    "boost_superposed",
    "project_positive_parity",
    "rapidities_for_wigner_angle",
    "trace_out_parity",
    "wigner_angle",
    "NegativitySet",
    "TwoParticleState",
    "apply_boost",
    "build_bell_state",
    "closed_form_parallel",
    "com_framework",
    "delta_mean_negativities",
    "negativity_set",
    "parallel_framework",
    "hermitian_eigenvalues",
    "kron",
    "normalize",
    "partial_trace",
    "partial_transpose",
]
