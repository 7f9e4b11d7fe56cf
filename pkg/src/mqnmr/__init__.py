"""Exact simulation of double-quantum NMR dynamics in dipolar spin clusters,
with coherence intensities, Wootters concurrence and an entanglement witness."""
from .coherence import (
    CoherenceComponents,
    CoherenceProfile,
    analytic_intensities,
    coherence_profile,
    decompose_by_order,
    intensity,
)
from .entangle import (
    EntanglementReport,
    analytic_concurrence,
    analytic_lambdas,
    concurrence,
    concurrence_from_coherences,
    entanglement_witness,
    partial_trace,
    spin_flip,
    witness_threshold,
)
from .errors import ConfigError, InvalidStateError, MQNMRError, NumericResidueError
from .evolve import (
    SpectralDecomposition,
    analytic_rho_two_spin,
    check_density_matrix,
    evolve,
    hermitian_eigendecompose,
    ht_reference,
    thermal_state,
)
from .model import (
    ENTANGLEMENT_BETA,
    DipolarGeometry,
    PhysicalParams,
    SpinSystem,
    beta_from,
    build_h_mq,
    critical_temperature,
    dipolar_coupling,
    hmq_eigenbasis_two_spin,
)
from .spinops import pauli, raising_lowering, site_operator, spin_component, total_iz

__version__ = "0.1.0"
