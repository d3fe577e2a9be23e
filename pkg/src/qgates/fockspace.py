"""Dense single-mode oscillator operators on a truncated Fock space.

Basis ordering is ``|0>, |1>, ..., |D-1>``.  Every matrix is stored as
``np.clongdouble``; see :mod:`qgates.qalgebra` for why.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .qalgebra import (
    REAL,
    DeformationParameter,
    DomainError,
    PsiSpec,
    number_shift,
    psi_eval,
    q_from_s,
    q_number,
)

COMPLEX = np.clongdouble
DEFAULT_DIM = 8


class Role(enum.Enum):
    ANNIHILATOR = "annihilator"
    CREATOR = "creator"
    NUMBER = "number"
    SHIFTED_NUMBER = "shifted_number"
    REALIZATION_FACTOR = "realization_factor"
    GENERAL = "general"


@dataclass(frozen=True, eq=False)
class OperatorMatrix:
    entries: np.ndarray
    role: Role = Role.GENERAL

    def __post_init__(self):
        m = np.array(self.entries, dtype=COMPLEX)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"operator must be square, got shape {m.shape}")
        m.flags.writeable = False
        object.__setattr__(self, "entries", m)

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def dag(self) -> "OperatorMatrix":
        role = {Role.ANNIHILATOR: Role.CREATOR, Role.CREATOR: Role.ANNIHILATOR}.get(self.role, self.role)
        return OperatorMatrix(self.entries.conj().T, role)

    def __matmul__(self, other):
        if isinstance(other, OperatorMatrix):
            return OperatorMatrix(self.entries @ other.entries)
        return self.entries @ np.asarray(other, dtype=COMPLEX)

    def diagonal(self) -> np.ndarray:
        return np.diagonal(self.entries).copy()

    def to_pairs(self) -> list:
        """Row-major ``[[re, im], ...]`` nested lists for JSON dumps."""
        return [[[float(z.real), float(z.imag)] for z in row] for row in self.entries]


def _check_dim(D: int, minimum: int = 2) -> int:
    if isinstance(D, bool) or int(D) != D or D < minimum:
        raise DomainError(f"truncation dimension must be an integer >= {minimum}, got {D!r}")
    return int(D)


def _superdiagonal(values, role: Role) -> OperatorMatrix:
    D = len(values) + 1
    m = np.zeros((D, D), dtype=COMPLEX)
    m[np.arange(D - 1), np.arange(1, D)] = values
    return OperatorMatrix(m, role)


def build_annihilator(D: int) -> OperatorMatrix:
    D = _check_dim(D)
    return _superdiagonal(np.sqrt(np.arange(1, D, dtype=REAL)), Role.ANNIHILATOR)


def build_creation(D: int) -> OperatorMatrix:
    return build_annihilator(D).dag()


def build_number(D: int) -> OperatorMatrix:
    D = _check_dim(D)
    return OperatorMatrix(np.diag(np.arange(D, dtype=REAL)), Role.NUMBER)


def build_q_annihilator(D: int, q: DeformationParameter) -> OperatorMatrix:
    """a_q with ``a_q |n> = sqrt([n]) |n-1>``."""
    D = _check_dim(D)
    brackets = np.array([q_number(n, q) for n in range(1, D)], dtype=REAL)
    return _superdiagonal(np.sqrt(brackets), Role.ANNIHILATOR)


def build_q_creation(D: int, q: DeformationParameter) -> OperatorMatrix:
    return build_q_annihilator(D, q).dag()


def function_of_number(D: int, f, offset: int = 0) -> OperatorMatrix:
    """Diagonal ``f(N + offset)`` with ``f`` applied to extended-precision levels."""
    D = _check_dim(D)
    levels = np.arange(D, dtype=REAL) + offset
    return OperatorMatrix(np.diag(np.array([f(n) for n in levels], dtype=COMPLEX)))


def factor_squared(n: int, q: DeformationParameter, psi1: PsiSpec, psi2: PsiSpec) -> np.longdouble:
    """Radicand ``(q^n psi1 - q^-n psi2) / (n (q - 1/q))`` of the realization factor at level n.

    Level 0 with ``psi1 == psi2`` uses the limit ``psi s / sinh(s)``; with
    unequal psi the level-0 value is pinned to 0 (the factor always sits to
    the right of ``a``, which annihilates the vacuum anyway).
    """
    p1, p2 = psi_eval(psi1, q), psi_eval(psi2, q)
    if p1 == p2:
        if n == 0:
            s = q.s_ext
            return p1 if q.undeformed else p1 * s / np.sinh(s)
        return p1 * q_number(n, q) / REAL(n)
    if n == 0:
        return REAL(0)
    qq = q.q_ext
    # p1 != p2 forces s > 0 because psi(1) = 1
    value = (qq ** n * p1 - qq ** -n * p2) / (REAL(n) * (qq - 1 / qq))
    if value < 0:
        raise DomainError(
            f"negative realization radicand {float(value):.6g} at n={n}, q={q.q!r}, psi1={psi1}, psi2={psi2}"
        )
    return value


def realization_factor(D: int, q: DeformationParameter, psi1: PsiSpec, psi2: PsiSpec) -> OperatorMatrix:
    D = _check_dim(D)
    diag = np.sqrt(np.array([factor_squared(n, q, psi1, psi2) for n in range(D)], dtype=REAL))
    return OperatorMatrix(np.diag(diag), Role.REALIZATION_FACTOR)


def harmonic_realized_q_annihilator(
    D: int, q: DeformationParameter, psi1: PsiSpec, psi2: PsiSpec
) -> OperatorMatrix:
    """``a_q = a F(N, q)``, the ordering written in the realization formula."""
    product = build_annihilator(D) @ realization_factor(D, q, psi1, psi2)
    return OperatorMatrix(product.entries, Role.ANNIHILATOR)


def harmonic_realized_q_creation(D: int, q: DeformationParameter, psi1: PsiSpec, psi2: PsiSpec) -> OperatorMatrix:
    return harmonic_realized_q_annihilator(D, q, psi1, psi2).dag()


def shifted_number(D: int, s: float, psi2: PsiSpec) -> OperatorMatrix:
    """Deformed number operator ``N = N_hat - (1/s) ln psi2``."""
    D = _check_dim(D)
    shift = number_shift(psi2, q_from_s(s))
    return OperatorMatrix(np.diag(np.arange(D, dtype=REAL) - shift), Role.SHIFTED_NUMBER)


class Relation(enum.Enum):
    DEFORMED_COMMUTATOR_1A = "deformed_commutator"
    NUMBER_LADDER_1B = "number_ladder"
    BRACKET_PRODUCT_1B = "bracket_product"
    FUNCTION_SHIFT_1C = "function_shift"


@dataclass(frozen=True)
class AlgebraReport:
    relation: Relation
    max_residual: float
    checked_subspace: int
    details: dict = field(default_factory=dict, compare=False)


def _maxabs(m: np.ndarray) -> float:
    return float(np.max(np.abs(m))) if m.size else 0.0


def deformed_commutator_residual(D: int, q: DeformationParameter) -> np.ndarray:
    """Full-space matrix ``a_q a_q+ - q a_q+ a_q - q^-N``."""
    a = build_q_annihilator(D, q).entries
    ad = a.conj().T
    qq = q.q_ext
    q_minus_n = np.diag(qq ** -np.arange(D, dtype=REAL))
    return a @ ad - qq * (ad @ a) - q_minus_n


def truncation_defect(D: int, q: DeformationParameter) -> tuple[float, float]:
    """Measured top-level residual of the deformed commutator and its scalar prediction.

    Truncation deletes the ``[D]`` term that ``a_q a_q+`` would carry at
    level D-1, so the residual there is ``|0 - q[D-1] - q^-(D-1)|``, which
    equals ``[D]``.
    """
    D = _check_dim(D, 3)
    measured = abs(deformed_commutator_residual(D, q)[D - 1, D - 1])
    predicted = abs(-q.q_ext * q_number(D - 1, q) - q.q_ext ** -(D - 1))
    return measured, predicted


def algebra_residual(D: int, q: DeformationParameter, full_space: bool = False) -> list[AlgebraReport]:
    """Residuals of the q-oscillator relations for the direct q-ladder matrices.

    Relations involving ``a_q a_q+`` are checked on levels ``0..D-2`` unless
    ``full_space`` is set, in which case the top-level truncation defect is
    included on purpose.
    """
    D = _check_dim(D, 3)
    top = D - 1 if full_space else D - 2
    a = build_q_annihilator(D, q).entries
    ad = a.conj().T
    N = build_number(D).entries
    qq = q.q_ext
    levels = np.arange(D, dtype=REAL)
    brackets = np.array([q_number(n, q) for n in levels], dtype=REAL)
    brackets_up = np.array([q_number(n + 1, q) for n in levels], dtype=REAL)
    sub = slice(0, top + 1)

    r1a = deformed_commutator_residual(D, q)[sub, sub]

    ladder = max(_maxabs(N @ a - a @ N + a), _maxabs(N @ ad - ad @ N - ad))

    bracket = max(
        _maxabs(ad @ a - np.diag(brackets)),
        _maxabs((a @ ad - np.diag(brackets_up))[sub, sub]),
    )

    shift = 0.0
    witnesses = {"q^N": lambda n: qq ** n, "N^2": lambda n: n * n}
    for f in witnesses.values():
        fN = function_of_number(D, f).entries
        fN_up = function_of_number(D, f, +1).entries
        fN_down = function_of_number(D, f, -1).entries
        shift = max(shift, _maxabs(a @ fN - fN_up @ a), _maxabs(ad @ fN - fN_down @ ad))

    return [
        AlgebraReport(Relation.DEFORMED_COMMUTATOR_1A, _maxabs(r1a), top),
        AlgebraReport(Relation.NUMBER_LADDER_1B, ladder, D - 1),
        AlgebraReport(Relation.BRACKET_PRODUCT_1B, bracket, top),
        AlgebraReport(Relation.FUNCTION_SHIFT_1C, shift, D - 1, {"witnesses": sorted(witnesses)}),
    ]
