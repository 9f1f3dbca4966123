"""Multi-photon Hong-Ou-Mandel interference as a quantum walk and spin-chain simulator."""

__version__ = "0.1.0"

from .kravchuk import (
    KravchukParams,
    kravchuk_function,
    kravchuk_column,
    kravchuk_matrix,
    kravchuk_hypergeometric,
    kravchuk_exact,
    bs_amplitude,
    bs_amplitude_matrix,
    fractional_qkt_order,
)
from .fock_walk import (
    TwoModeFock,
    BeamSplitter,
    theta_of_r,
    r_of_theta,
    hbs_matrix,
    basis_state,
    evolve,
    evolve_theta,
    walk_distribution,
    distribution_variance,
    variance_exact,
    variance_approx,
    mirror,
    perfect_state_transfer_fidelity,
)
from .spin_chain import (
    ChainSpec,
    EdgeState,
    ssh_couplings,
    ssh_localisation_length,
    generalized_ssh_couplings,
    eigensystem,
    zero_energy_mode,
    near_zero_mode,
    fit_localisation_length,
    edge_envelope,
    photonic_equivalence_check,
)
from .topology import SymmetryReport, classify
from .decoherence import decohered_distribution
from .photonics_mc import SpdcSource, ExperimentConfig, CountRecord, run_experiment, pair_generation_rate
