"""Entropic uncertainty of unitary-operator pairs probed by quantum testers."""

from .gamesim import GameConfig, GameTranscript, empirical_entropy, run_game, transcript_to_json
from .linalg import (
    DEFAULT_TOL,
    ConvergenceError,
    adjoint,
    eig_unitary,
    inner,
    kron,
    matmul,
    norm,
    operator_norm,
    psd_sqrt,
    trace,
)
from .operators import (
    UnitaryBasis,
    UnitaryOperator,
    clock_shift_pair,
    equal_up_to_phase,
    haar_random_unitary,
    hs_inner,
    identity,
    is_muub,
    is_perfectly_distinguishable,
    omega,
    pauli,
    phase_aligned_distance,
    unitary_from_json,
    unitary_to_json,
)
from .saturation import (
    MuubCertification,
    SaturationReport,
    SweepRecord,
    muub_certify_by_saturation,
    saturating_tester_by_construction,
    search_min_uncertainty,
    su2_basis,
    su2_overlap_point,
    su2_overlap_surface,
    sweep_pair,
    sweep_to_csv,
    zero_bound_witness,
)
from .testers import (
    DensityMatrix,
    MesMeasurement,
    Povm,
    ProjectiveMeasurement,
    PureState,
    Tester,
    bell_basis,
    computational_basis,
    is_trivial_measurement,
    mes_state,
    outcome_distribution,
    povm_from_projective,
    tester_from_json,
    tester_to_json,
    trivial_tester,
)
from .uncertainty import (
    EntropicBound,
    EntropyValue,
    OutcomeDistribution,
    mes_bound,
    pair_uncertainty,
    povm_bound,
    projective_bound,
    shannon_entropy,
    variance_uncertainty,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "ConvergenceError",
    "DensityMatrix",
    "EntropicBound",
    "EntropyValue",
    "GameConfig",
    "GameTranscript",
    "MesMeasurement",
    "MuubCertification",
    "OutcomeDistribution",
    "Povm",
    "ProjectiveMeasurement",
    "PureState",
    "SaturationReport",
    "SweepRecord",
    "Tester",
    "UnitaryBasis",
    "UnitaryOperator",
    "adjoint",
    "bell_basis",
    "clock_shift_pair",
    "computational_basis",
    "eig_unitary",
    "empirical_entropy",
    "equal_up_to_phase",
    "haar_random_unitary",
    "hs_inner",
    "identity",
    "inner",
    "is_muub",
    "is_perfectly_distinguishable",
    "is_trivial_measurement",
    "kron",
    "matmul",
    "mes_bound",
    "mes_state",
    "muub_certify_by_saturation",
    "norm",
    "omega",
    "operator_norm",
    "outcome_distribution",
    "pair_uncertainty",
    "pauli",
    "phase_aligned_distance",
    "povm_bound",
    "povm_from_projective",
    "projective_bound",
    "psd_sqrt",
    "run_game",
    "saturating_tester_by_construction",
    "search_min_uncertainty",
    "shannon_entropy",
    "su2_basis",
    "su2_overlap_point",
    "su2_overlap_surface",
    "sweep_pair",
    "sweep_to_csv",
    "tester_from_json",
    "tester_to_json",
    "trace",
    "transcript_to_json",
    "trivial_tester",
    "unitary_from_json",
    "unitary_to_json",
    "variance_uncertainty",
    "zero_bound_witness",
]
