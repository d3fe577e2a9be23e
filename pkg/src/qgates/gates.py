"""Hadamard and phase-shift gates on ordinary and q-deformed qubits.

Gate matrices act on the ordered basis ``(|1>, |0>)``.  Besides the 2x2
route, the module builds the same gates as operators on the two-mode Fock
space so the two constructions can be checked against each other.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .fockspace import (
    COMPLEX,
    build_number,
    build_q_annihilator,
    factor_squared,
    harmonic_realized_q_creation,
    _check_dim,
)
from .qalgebra import (
    REAL,
    DeformationParameter,
    DomainError,
    PsiSpec,
    consistency_ratio,
    psi_eval,
    q_from_s,
)
from .schwinger import (
    CaseParameters,
    QubitState,
    jm_state,
    norm_ratio,
    qubit_basis_state,
    vacuum,
)

SQRT_HALF = np.sqrt(REAL(0.5))


@dataclass(frozen=True, eq=False)
class GateMatrix:
    entries: np.ndarray
    normalized: bool = True

    def __post_init__(self):
        m = np.array(self.entries, dtype=COMPLEX)
        if m.shape != (2, 2):
            raise ValueError(f"single-qubit gate must be 2x2, got {m.shape}")
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    def dag(self) -> "GateMatrix":
        return GateMatrix(self.entries.conj().T, self.normalized)

    def __matmul__(self, other):
        if isinstance(other, GateMatrix):
            return GateMatrix(self.entries @ other.entries, self.normalized and other.normalized)
        return self.entries @ np.asarray(other, dtype=COMPLEX)

    def unitarity_residual(self) -> float:
        return float(np.max(np.abs(self.entries.conj().T @ self.entries - np.eye(2))))


def hadamard_sign(n1: int, n2: int) -> int:
    """Sign ``(-1)^((n1 - n2 + 1)/2)`` of the diagonal Hadamard term.

    Only defined at qubit occupations; elsewhere the exponent can be
    fractional.
    """
    if {n1, n2} != {0, 1}:
        raise DomainError(f"Hadamard sign undefined away from qubit occupations, got ({n1}, {n2})")
    return -1 if (n1 - n2 + 1) // 2 else 1


def hadamard_matrix(normalized: bool = True) -> GateMatrix:
    """``|x> -> (-1)^x |x> + |1-x>``; columns are the images of ``|1>`` and ``|0>``."""
    m = np.array([[-1, 1], [1, 1]], dtype=COMPLEX)
    if normalized:
        m = m * SQRT_HALF
    return GateMatrix(m, normalized)


_QUARTER_TURNS = {0: COMPLEX(1), 1: COMPLEX(1j), 2: COMPLEX(-1), 3: COMPLEX(-1j)}


def phase_factor(theta: float) -> np.clongdouble:
    """``exp(i theta)``, exact when theta is the double nearest a multiple of pi/2."""
    k = round(float(theta) / (math.pi / 2))
    if float(theta) == k * (math.pi / 2):
        return _QUARTER_TURNS[k % 4]
    return np.exp(1j * REAL(theta))


def phase_shift_matrix(theta: float) -> GateMatrix:
    return GateMatrix(np.diag([phase_factor(theta), COMPLEX(1)]), True)


def apply_gate(gate: GateMatrix, state: QubitState) -> QubitState:
    return state.with_amplitudes(gate @ state.amplitudes)


def apply_hadamard(state: QubitState, normalized: bool = True) -> QubitState:
    """Scale and case tag pass through: the psi prefactor multiplies both sides."""
    return apply_gate(hadamard_matrix(normalized), state)


def apply_phase_shift(state: QubitState, theta: float) -> QubitState:
    return apply_gate(phase_shift_matrix(theta), state)


# -- two-mode realizations -------------------------------------------------

def qubit_projector(D: int) -> np.ndarray:
    p = np.zeros((D * D, D * D), dtype=COMPLEX)
    p[D, D] = p[1, 1] = 1
    return p


def deformed_qubit_kets(
    D: int, q: DeformationParameter, psi: PsiSpec, psi2: PsiSpec | None = None
) -> dict[int, np.ndarray]:
    """Two-mode vectors of the deformed qubit kets, built from realized creators ``F(N) a+``."""
    return {x: jm_state(x, 1 - x, D, q, deformed=True, psi=psi, psi2=psi2).amplitudes for x in (0, 1)}


def hadamard_two_mode_operator(
    D: int, q: DeformationParameter, psi: PsiSpec, normalized: bool = True, psi2: PsiSpec | None = None
) -> np.ndarray:
    """Operator sending each deformed ket ``|x>_q`` to ``sign |x>_q + |1-x>_q``.

    Kets come from :func:`deformed_qubit_kets`; the operator vanishes off
    their span.
    """
    D = _check_dim(D, 3)
    kets = deformed_qubit_kets(D, q, psi, psi2)
    op = np.zeros((D * D, D * D), dtype=COMPLEX)
    for x, ket in kets.items():
        image = hadamard_sign(x, 1 - x) * ket + kets[1 - x]
        op += np.outer(image, ket.conj()) / np.vdot(ket, ket).real
    return op * SQRT_HALF if normalized else op


def ladder_hadamard_operator(D: int, q: DeformationParameter, normalized: bool = True) -> np.ndarray:
    """Hadamard written with q-ladders: ``P (a1+ a2 + a2+ a1 + N2 - N1) P``.

    On the qubit sector ``N2 - N1`` equals ``(-1)^n1`` and the hopping terms
    swap ``|1,0>`` and ``|0,1>`` (``[1] = 1`` at any q).
    """
    D = _check_dim(D, 3)
    a = build_q_annihilator(D, q).entries
    ad = a.conj().T
    n = build_number(D).entries
    eye = np.eye(D, dtype=COMPLEX)
    a1, a2 = np.kron(a, eye), np.kron(eye, a)
    c1, c2 = np.kron(ad, eye), np.kron(eye, ad)
    n1, n2 = np.kron(n, eye), np.kron(eye, n)
    p = qubit_projector(D)
    op = p @ (c1 @ a2 + c2 @ a1 + n2 - n1) @ p
    return op * SQRT_HALF if normalized else op


def phase_two_mode_operator(D: int, theta: float) -> np.ndarray:
    """``exp(i theta N1)``: phase on the first-mode occupation."""
    D = _check_dim(D)
    phases = np.array([phase_factor(theta) ** n for n in range(D)], dtype=COMPLEX)
    return np.kron(np.diag(phases), np.eye(D, dtype=COMPLEX))


def deformed_hadamard_block(
    D: int, q: DeformationParameter, psi: PsiSpec, normalized: bool = True, psi2: PsiSpec | None = None
) -> np.ndarray:
    """2x2 matrix of the deformed Hadamard in the ordinary qubit basis, common scale removed.

    Column x holds the ordinary-basis components of the image of ``|x>_q``
    divided by the level-1 realization factor, which is ``sqrt(psi(q))``
    when ``psi2`` is omitted.
    """
    op = hadamard_two_mode_operator(D, q, psi, normalized, psi2)
    kets = deformed_qubit_kets(D, q, psi, psi2)
    scale = np.sqrt(factor_squared(1, q, psi, psi if psi2 is None else psi2))
    idx = {1: D, 0: 1}
    block = np.zeros((2, 2), dtype=COMPLEX)
    order = (1, 0)
    for col, x in enumerate(order):
        image = op @ kets[x]
        for row, y in enumerate(order):
            block[row, col] = image[idx[y]] / scale
    return block


def carried_factors(D: int, q: DeformationParameter, psi: PsiSpec, psi2: PsiSpec | None = None) -> tuple:
    """Realization factors picked up by ``|1>`` (mode 1 raised) and ``|0>`` (mode 2 raised).

    With ``N2 = I - N1`` these are ``F(N)`` and ``F(I - N)`` evaluated on the
    state each one acts on.
    """
    c = harmonic_realized_q_creation(D, q, psi, psi if psi2 is None else psi2).entries
    eye = np.eye(D, dtype=COMPLEX)
    v0 = vacuum(D)
    f_up = (np.kron(c, eye) @ v0)[D]
    f_down = (np.kron(eye, c) @ v0)[1]
    return f_up, f_down


def uniform_q_grid(points: int = 100) -> list[DeformationParameter]:
    """``points`` values of q evenly spaced in s over (0, 1], i.e. q in (1, e]."""
    return [q_from_s(k / points) for k in range(1, points + 1)]


@dataclass(frozen=True)
class EquivalenceReport:
    q_grid: list
    max_operator_residual: float
    ratio_residuals: dict
    max_block_residual: float
    verdict: bool
    tolerance: float = 1e-12
    failures: list = field(default_factory=list)


def _equivalence_point(D, q, psi, psi_partner):
    f_up, f_down = carried_factors(D, q, psi, psi_partner)
    if f_up == 0 or f_down == 0:
        raise DomainError(f"singular realization factor at q={q.q!r}, psi={psi}")
    op_res = float(abs(f_down / f_up - 1))
    target = psi_eval(psi, q) / psi_eval(psi_partner, q)
    ratios = {n: float(abs(consistency_ratio(n, q) - target)) for n in (0, 1)}
    block = deformed_hadamard_block(D, q, psi, psi2=psi_partner)
    block_res = float(np.max(np.abs(block - hadamard_matrix(True).entries)))
    return op_res, ratios, block_res


def verify_hadamard_equivalence(
    D: int,
    q_grid: list[DeformationParameter],
    psi: PsiSpec,
    tolerance: float = 1e-12,
    psi_partner: PsiSpec | None = None,
    jobs: int = 1,
) -> EquivalenceReport:
    """Check that the deformed Hadamard is indistinguishable from the ordinary one.

    For each q: the factors ``F(N)`` and ``F(1 - N)`` carried by the two
    qubit kets must agree, the consistency ratio at ``n_hat in {0, 1}`` must
    equal ``psi1/psi2`` (``psi_partner`` plays psi2, default ``psi``), and
    the deformed Hadamard block must equal the normalized Hadamard once the
    common ``sqrt(psi)`` is divided out.
    """
    D = _check_dim(D, 3)
    partner = psi if psi_partner is None else psi_partner
    work = lambda q: _equivalence_point(D, q, psi, partner)  # noqa: E731
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            results = list(pool.map(work, q_grid))
    else:
        results = [work(q) for q in q_grid]

    op_max, block_max = 0.0, 0.0
    ratio_max = {0: 0.0, 1: 0.0}
    failures = []
    for q, (op_res, ratios, block_res) in zip(q_grid, results):
        op_max = max(op_max, op_res)
        block_max = max(block_max, block_res)
        for n, r in ratios.items():
            ratio_max[n] = max(ratio_max[n], r)
        if max(op_res, block_res, *ratios.values()) > tolerance:
            failures.append(q.s)
    return EquivalenceReport(
        q_grid=[q.q for q in q_grid],
        max_operator_residual=op_max,
        ratio_residuals=ratio_max,
        max_block_residual=block_max,
        verdict=not failures,
        tolerance=tolerance,
        failures=failures,
    )


def case_distinguishability(s: float, n_hat: float, theta: float, x: int = 1) -> np.longdouble:
    """Norm ratio Case II / Case I after a phase shift on matched basis states."""
    if not n_hat > 0:
        raise DomainError(f"Case II needs n_hat > 0, got {n_hat!r}")
    q = q_from_s(s)
    one = qubit_basis_state(x, 2, q, CaseParameters.case_one(s))
    two = qubit_basis_state(x, 2, q, CaseParameters.case_two(s, n_hat))
    return norm_ratio(apply_phase_shift(two, theta), apply_phase_shift(one, theta))


def expected_signature(s: float, n_hat: float) -> float:
    return math.exp(s * n_hat)
