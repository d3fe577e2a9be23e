"""q-deformed oscillators, Jordan-Schwinger qubits and single-qubit gates on them."""
from .qalgebra import (
    DeformationParameter,
    DomainError,
    PsiKind,
    PsiSpec,
    consistency_ratio,
    number_shift,
    psi_eval,
    q_factorial,
    q_from_s,
    q_number,
)
from .fockspace import (
    AlgebraReport,
    OperatorMatrix,
    Relation,
    Role,
    algebra_residual,
    build_annihilator,
    build_creation,
    build_number,
    build_q_annihilator,
    build_q_creation,
    harmonic_realized_q_annihilator,
    realization_factor,
    shifted_number,
    truncation_defect,
)
from .schwinger import (
    CaseParameters,
    CaseTag,
    QubitState,
    TwoModeState,
    embed_qubit,
    jm_state,
    norm_ratio,
    qubit_basis_state,
)
from .gates import (
    EquivalenceReport,
    GateMatrix,
    apply_hadamard,
    apply_phase_shift,
    case_distinguishability,
    hadamard_matrix,
    phase_shift_matrix,
    verify_hadamard_equivalence,
)

__version__ = "0.1.0"
