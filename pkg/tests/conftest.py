import mpmath
import numpy as np
import pytest

from qgates.qalgebra import q_from_s

mpmath.mp.dps = 40


def mp_q_number(x, s):
    """Direct (q^x - q^-x)/(q - 1/q) at 40 digits; x at s == 0."""
    s = mpmath.mpf(s)
    if s == 0:
        return mpmath.mpf(x)
    q = mpmath.e ** s
    return (q ** x - q ** -x) / (q - 1 / q)


def mp_q_factorial(n, s):
    return mpmath.fprod(mp_q_number(k, s) for k in range(1, n + 1))


def to_float(m):
    return np.asarray(m, dtype=np.clongdouble)


@pytest.fixture(params=[0.1, 0.5, 1.0], ids=lambda s: f"s={s}")
def q(request):
    return q_from_s(request.param)


def mpf(x):
    """Exact conversion of a (long)double or the real part of a complex to mpmath."""
    x = np.longdouble(np.real(x))
    return mpmath.mpf(np.format_float_scientific(x, unique=True))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
