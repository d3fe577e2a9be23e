"""Two-mode Jordan-Schwinger states and the single-qubit encoding built on them.

A qubit lives in the ``j = 1/2`` sector ``n1 + n2 = 1`` of two oscillators:
``|1> = |1>_1 |0>_2`` and ``|0> = |0>_1 |1>_2``.  Qubit amplitudes are ordered
``(up, down)`` = ``(|1>, |0>)``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .fockspace import (
    COMPLEX,
    build_creation,
    build_q_creation,
    harmonic_realized_q_creation,
)
from .qalgebra import (
    REAL,
    DeformationParameter,
    DomainError,
    PsiKind,
    PsiSpec,
    number_shift,
    psi_eval,
    q_factorial,
    q_from_s,
)


class CaseTag(enum.Enum):
    CASE_I = "I"
    CASE_II = "II"


@dataclass(frozen=True, eq=False)
class TwoModeState:
    """Amplitudes over ``|n1> (x) |n2>``, row-major in ``(n1, n2)``. Never auto-normalized."""

    dim: int
    amplitudes: np.ndarray

    def __post_init__(self):
        v = np.array(self.amplitudes, dtype=COMPLEX).reshape(-1)
        if v.shape[0] != self.dim * self.dim:
            raise ValueError(f"expected {self.dim ** 2} amplitudes for D={self.dim}, got {v.shape[0]}")
        v.flags.writeable = False
        object.__setattr__(self, "amplitudes", v)

    def amplitude(self, n1: int, n2: int) -> complex:
        return self.amplitudes[n1 * self.dim + n2]

    def norm_squared(self) -> np.longdouble:
        return np.sum(np.abs(self.amplitudes) ** 2)

    def norm(self) -> np.longdouble:
        return np.sqrt(self.norm_squared())

    def grid(self) -> np.ndarray:
        return self.amplitudes.reshape(self.dim, self.dim)

    def to_dict(self) -> dict:
        nz = np.flatnonzero(self.amplitudes)
        return {
            "dim": self.dim,
            "amplitudes": [
                {"n1": int(i // self.dim), "n2": int(i % self.dim),
                 "value": [float(self.amplitudes[i].real), float(self.amplitudes[i].imag)]}
                for i in nz
            ],
        }


@dataclass(frozen=True)
class CaseParameters:
    s: float
    n_hat: float = 0.0
    psi: PsiSpec = field(default_factory=PsiSpec.constant_one)

    def __post_init__(self):
        q_from_s(self.s)
        if self.psi.kind is PsiKind.POWER_LAW:
            if not self.n_hat > 0:
                raise DomainError("Case II needs n_hat > 0; n_hat = 0 collapses psi to 1 (Case I)")
            if self.psi.n_hat != self.n_hat:
                raise DomainError(f"psi exponent {self.psi.n_hat} disagrees with n_hat {self.n_hat}")

    @classmethod
    def case_one(cls, s: float) -> "CaseParameters":
        return cls(s, 0.0, PsiSpec.constant_one())

    @classmethod
    def case_two(cls, s: float, n_hat: float) -> "CaseParameters":
        return cls(s, float(n_hat), PsiSpec.power_law(n_hat))

    @property
    def tag(self) -> CaseTag:
        return CaseTag.CASE_II if self.psi.kind is PsiKind.POWER_LAW else CaseTag.CASE_I

    @property
    def q(self) -> DeformationParameter:
        return q_from_s(self.s)

    def scale(self) -> np.longdouble:
        """Prefactor ``psi(q)^{(n1+n2)/2}`` with ``n1 + n2 = 1``."""
        return np.sqrt(psi_eval(self.psi, self.q))


def recovered_n_hat(case: CaseParameters) -> np.longdouble:
    """Invert ``psi(q) = q^n_hat`` through ``(1/s) ln psi(q)``."""
    return number_shift(case.psi, case.q)


@dataclass(frozen=True)
class QubitState:
    """Qubit with unit-scale amplitudes ``(up, down)`` and a real scale prefactor.

    The physical column vector is ``scale * (up, down)``; Case II states carry
    ``scale = sqrt(psi(q))`` and Case I states carry exactly 1.
    """

    up: complex
    down: complex
    case_tag: CaseTag = CaseTag.CASE_I
    scale: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "up", COMPLEX(self.up))
        object.__setattr__(self, "down", COMPLEX(self.down))
        object.__setattr__(self, "scale", REAL(self.scale))
        if not self.scale > 0:
            raise DomainError(f"scale must be positive, got {self.scale}")
        if self.case_tag is CaseTag.CASE_I and self.scale != 1:
            raise DomainError("Case I qubit states have scale exactly 1")

    @property
    def amplitudes(self) -> np.ndarray:
        return np.array([self.up, self.down], dtype=COMPLEX)

    @property
    def vector(self) -> np.ndarray:
        return self.scale * self.amplitudes

    def norm_squared(self) -> np.longdouble:
        return np.sum(np.abs(self.vector) ** 2)

    def with_amplitudes(self, amps) -> "QubitState":
        return QubitState(amps[0], amps[1], self.case_tag, self.scale)

    def to_dict(self, label=None) -> dict:
        return {
            "label": label,
            "case": self.case_tag.value,
            "scale": float(self.scale),
            "amplitudes": [[float(z.real), float(z.imag)] for z in self.amplitudes],
        }


def _creation_pair(D: int, q: DeformationParameter, deformed: bool, psi: PsiSpec | None, psi2: PsiSpec | None):
    if not deformed:
        c = build_creation(D).entries
    elif psi is None:
        c = build_q_creation(D, q).entries
    else:
        c = harmonic_realized_q_creation(D, q, psi, psi if psi2 is None else psi2).entries
    eye = np.eye(D, dtype=COMPLEX)
    return np.kron(c, eye), np.kron(eye, c)


def vacuum(D: int) -> np.ndarray:
    v = np.zeros(D * D, dtype=COMPLEX)
    v[0] = 1
    return v


def jm_state(
    n1: int,
    n2: int,
    D: int,
    q: DeformationParameter,
    deformed: bool,
    psi: PsiSpec | None = None,
    psi2: PsiSpec | None = None,
) -> TwoModeState:
    """``(c1)^n1 (c2)^n2 |0,0> / sqrt([n1]! [n2]!)`` built by repeated ladder action.

    ``deformed=False`` uses ordinary creators and factorials.  With
    ``deformed=True`` the direct q-creators are used, or the harmonic
    realization ``F(N) a+`` when ``psi`` is given.  ``psi2`` is the second
    argument of F and defaults to ``psi``; both modes share the same F.
    """
    for n in (n1, n2):
        if isinstance(n, bool) or int(n) != n or n < 0:
            raise DomainError(f"occupation numbers must be non-negative integers, got {n!r}")
        if n > D - 1:
            raise DomainError(f"occupation {n} overflows truncation D={D}")
    c1, c2 = _creation_pair(D, q, deformed, psi, psi2)
    v = vacuum(D)
    for _ in range(n2):
        v = c2 @ v
    for _ in range(n1):
        v = c1 @ v
    if deformed:
        norm = np.sqrt(q_factorial(n1, q) * q_factorial(n2, q))
    else:
        norm = np.sqrt(REAL(math.factorial(n1) * math.factorial(n2)))
    return TwoModeState(D, v / REAL(norm))


def qubit_basis_state(x: int, D: int, q: DeformationParameter, case: CaseParameters) -> QubitState:
    """Basis qubit ``|x>`` for the given case; D is only validated (qubits need D >= 2)."""
    if x not in (0, 1) or isinstance(x, bool):
        raise DomainError(f"qubit label must be 0 or 1, got {x!r}")
    if D < 2:
        raise DomainError(f"qubit embedding needs D >= 2, got {D}")
    if q.s != case.s:
        raise DomainError(f"deformation s={q.s} disagrees with case parameters s={case.s}")
    up, down = (1, 0) if x == 1 else (0, 1)
    return QubitState(up, down, case.tag, case.scale())


def norm_ratio(case2: QubitState, case1: QubitState) -> np.longdouble:
    """``<II|II> / <I|I>`` for matched Case II and Case I states."""
    if case2.case_tag is not CaseTag.CASE_II or case1.case_tag is not CaseTag.CASE_I:
        raise DomainError("norm_ratio expects a Case II state then a Case I state")
    if np.max(np.abs(case2.amplitudes - case1.amplitudes)) > 1e-12:
        raise DomainError("states carry different qubit labels/amplitudes; ratio is not a case signature")
    return case2.norm_squared() / case1.norm_squared()


def embed_qubit(state: QubitState, D: int) -> TwoModeState:
    if D < 2:
        raise DomainError(f"qubit embedding needs D >= 2, got {D}")
    v = np.zeros(D * D, dtype=COMPLEX)
    up, down = state.vector
    v[1 * D + 0] = up
    v[0 * D + 1] = down
    return TwoModeState(D, v)


def qubit_subspace_indices(D: int) -> tuple[int, int]:
    """Flat indices of ``|1,0>`` and ``|0,1>``, in qubit order ``(|1>, |0>)``."""
    return D, 1
