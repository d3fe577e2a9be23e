"""Scalar q-arithmetic: deformation parameter, q-numbers, q-factorials and psi functions.

All kernels evaluate in numpy extended precision (``np.longdouble``) so that
matrix identities built on top of them hold to absolute tolerances near 1e-12
even when q-numbers grow into the millions.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

REAL = np.longdouble


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of a q-algebra routine."""


@dataclass(frozen=True)
class DeformationParameter:
    s: float
    q: float

    @property
    def undeformed(self) -> bool:
        return self.s == 0.0

    @property
    def s_ext(self) -> np.longdouble:
        return REAL(self.s)

    @property
    def q_ext(self) -> np.longdouble:
        return np.exp(REAL(self.s))


def q_from_s(s: float) -> DeformationParameter:
    """Return the deformation parameter ``q = exp(s)`` for ``0 <= s <= 1``."""
    s = float(s)
    if not 0.0 <= s <= 1.0 or math.isnan(s):
        raise DomainError(f"deformation exponent s={s!r} outside [0, 1]")
    return DeformationParameter(s=s, q=math.exp(s))


def q_number(x, q: DeformationParameter) -> np.longdouble:
    """The q-number ``[x] = (q**x - q**-x) / (q - 1/q)``.

    Evaluated as ``sinh(s x) / sinh(s)``; at ``q == 1`` the analytic limit
    ``[x] = x`` is returned.
    """
    x = REAL(x)
    if q.undeformed:
        return x
    s = q.s_ext
    return np.sinh(s * x) / np.sinh(s)


def q_factorial(n: int, q: DeformationParameter) -> np.longdouble:
    if isinstance(n, bool) or int(n) != n:
        raise DomainError(f"q-factorial needs an integer argument, got {n!r}")
    n = int(n)
    if n < 0:
        raise DomainError(f"q-factorial of negative integer {n}")
    out = REAL(1)
    for k in range(2, n + 1):
        out *= q_number(k, q)
    return out


class PsiKind(enum.Enum):
    CONSTANT_ONE = "constant"
    POWER_LAW = "power"


@dataclass(frozen=True)
class PsiSpec:
    """One of the arbitrary functions psi(q) with psi(1) = 1.

    ``CONSTANT_ONE`` is identically one; ``POWER_LAW`` is ``q**n_hat``.
    """

    kind: PsiKind = PsiKind.CONSTANT_ONE
    n_hat: float = 0.0

    def __post_init__(self):
        if self.kind is PsiKind.POWER_LAW:
            if not self.n_hat >= 0.0 or math.isinf(self.n_hat):
                raise DomainError(f"power-law exponent n_hat={self.n_hat!r} must be finite and >= 0")
        elif self.n_hat != 0.0:
            raise DomainError("constant-one psi takes no exponent")

    @classmethod
    def constant_one(cls) -> "PsiSpec":
        return cls(PsiKind.CONSTANT_ONE, 0.0)

    @classmethod
    def power_law(cls, n_hat: float) -> "PsiSpec":
        return cls(PsiKind.POWER_LAW, float(n_hat))

    @property
    def exponent(self) -> float:
        return self.n_hat if self.kind is PsiKind.POWER_LAW else 0.0

    def __str__(self):
        if self.kind is PsiKind.CONSTANT_ONE:
            return "1"
        return f"q^{self.n_hat:g}"


def psi_eval(spec: PsiSpec, q: DeformationParameter) -> np.longdouble:
    if spec.kind is PsiKind.CONSTANT_ONE:
        return REAL(1)
    return np.exp(q.s_ext * REAL(spec.n_hat))


def number_shift(spec: PsiSpec, q: DeformationParameter) -> np.longdouble:
    """The offset ``(1/s) ln psi(q)`` between deformed and ordinary occupation numbers."""
    if spec.exponent == 0:
        return REAL(0)
    if q.undeformed:
        raise DomainError(f"number shift (1/s) ln psi is singular at s=0 for psi={spec}")
    return np.log(psi_eval(spec, q)) / q.s_ext


def consistency_ratio(n_hat, q: DeformationParameter) -> np.longdouble:
    """Ratio psi_1/psi_2 that makes the two realization factors of a qubit agree.

    Returns ``(q^-n - n q^-n - n q^(n-1)) / (q^n - n q^n - n q^(1-n))`` for
    ``n = n_hat``.  Both sides vanish at ``n_hat = 1/2`` (any q) and the ratio
    is then undefined.
    """
    n = REAL(n_hat)
    qq = q.q_ext
    num = qq ** -n - n * qq ** -n - n * qq ** (n - 1)
    den = qq ** n - n * qq ** n - n * qq ** (1 - n)
    scale = max(abs(qq ** n), abs(n * qq ** n), abs(n * qq ** (1 - n)))
    if abs(den) <= 64 * np.finfo(REAL).eps * scale:
        raise DomainError(f"consistency ratio singular at n_hat={float(n_hat)!r}, q={q.q!r}")
    return num / den
