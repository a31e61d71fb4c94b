"""Exact photon tunneling probabilities between two coupled bosonic modes."""

from ._phtun import (
    CheckResult,
    DistributionKind,
    PeakPoint,
    PhotonNumberDistribution,
    SeriesError,
    SeriesPolicy,
    TransferMatrix,
    TunnelingConfig,
    TwoModeFockState,
    __version__,
    base_probability,
    coherent_pmf,
    evolve_fock,
    fock_pmf,
    hyp1f1,
    hyp2f1,
    oracle_distribution,
    outcome_probability,
    peak_multi,
    prob_coherent,
    prob_coherent_single_max,
    prob_multi,
    prob_one_photon,
    prob_squeezed,
    q_factor,
    run_verification,
    squeezed_pmf,
    state_norm,
    transfer_matrix,
    weighted_sum,
)

__all__ = [
    "CheckResult",
    "DistributionKind",
    "PeakPoint",
    "PhotonNumberDistribution",
    "SeriesError",
    "SeriesPolicy",
    "TransferMatrix",
    "TunnelingConfig",
    "TwoModeFockState",
    "__version__",
    "base_probability",
    "coherent_pmf",
    "evolve_fock",
    "fock_pmf",
    "hyp1f1",
    "hyp2f1",
    "oracle_distribution",
    "outcome_probability",
    "peak_multi",
    "prob_coherent",
    "prob_coherent_single_max",
    "prob_multi",
    "prob_one_photon",
    "prob_squeezed",
    "q_factor",
    "run_verification",
    "squeezed_pmf",
    "state_norm",
    "transfer_matrix",
    "weighted_sum",
]
