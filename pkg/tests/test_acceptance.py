"""Exit criteria for the library, one test per criterion.

Each test records a PASS/FAIL line that the conftest terminal-summary hook
prints at the end of the run.
"""
import math
from pathlib import Path

import mpmath
import numpy as np
import pytest

from qgates import cli
from qgates.fockspace import (
    algebra_residual,
    build_number,
    build_q_annihilator,
    deformed_commutator_residual,
    harmonic_realized_q_annihilator,
    realization_factor,
    truncation_defect,
)
from qgates.gates import (
    apply_hadamard,
    apply_phase_shift,
    case_distinguishability,
    deformed_hadamard_block,
    hadamard_matrix,
    hadamard_two_mode_operator,
    ladder_hadamard_operator,
    phase_shift_matrix,
    phase_two_mode_operator,
    uniform_q_grid,
    verify_hadamard_equivalence,
)
from qgates.qalgebra import PsiSpec, consistency_ratio, q_from_s, q_number
from qgates.schwinger import CaseParameters, QubitState, embed_qubit, norm_ratio, qubit_basis_state

from conftest import mp_q_number

RESULTS = []
ONE = PsiSpec.constant_one()
GOLDEN = Path(__file__).parent / "golden"


def record(label, worst, tol):
    ok = bool(worst <= tol)
    RESULTS.append(f"{'PASS' if ok else 'FAIL'}  {label}: worst={worst:.3e} tol={tol:g}")
    assert ok, f"{label}: {worst} > {tol}"


def test_ac1_deformed_algebra():
    commutator = spectrum = ladder = defect = 0.0
    for s in (0.1, 0.5, 1.0):
        q = q_from_s(s)
        for D in (4, 8, 16):
            res = deformed_commutator_residual(D, q)
            commutator = max(commutator, float(np.max(np.abs(res[:D - 1, :D - 1]))))
            a = build_q_annihilator(D, q).entries
            prod = (a.conj().T @ a).real
            m = mpmath.matrix([[mpmath.mpf(np.format_float_scientific(x, unique=True)) for x in row] for row in prod])
            eig, _ = mpmath.eigsy(m)
            want = sorted(mp_q_number(n, s) for n in range(D))
            spectrum = max(spectrum, float(max(abs(g - w) for g, w in zip(sorted(eig), want))))
            n = build_number(D).entries
            ladder = max(ladder, float(np.max(np.abs(n @ a - a @ n + a))))
            measured, predicted = truncation_defect(D, q)
            defect = max(defect, float(abs(measured - predicted)))
            # the defect is the dropped [D] term
            assert abs(measured / q_number(D, q) - 1) < 1e-15
            assert all(r.max_residual <= 1e-12 for r in algebra_residual(D, q))
    record("AC1 deformed commutator on levels 0..D-2", commutator, 1e-12)
    record("AC1 spectrum of a_q+ a_q equals [n]", spectrum, 1e-12)
    record("AC1 [N, a_q] + a_q = 0", ladder, 1e-12)
    record("AC1 truncation defect matches scalar formula", defect, 1e-10)


def test_ac2_case_one_collapse():
    worst = 0.0
    for s in (0.0, 1e-8, 0.1, 0.5, 1.0):
        q = q_from_s(s)
        for D in (4, 8, 16):
            diff = harmonic_realized_q_annihilator(D, q, ONE, ONE).entries - build_q_annihilator(D, q).entries
            worst = max(worst, float(np.max(np.abs(diff))))
    record("AC2 realized a_q equals direct q-ladder (psi = 1)", worst, 1e-12)


def test_ac3_hadamard_equivalence():
    grid = uniform_q_grid(100)
    assert len(grid) == 100 and grid[0].q > 1 and grid[-1].q == math.e
    ratio = block = 0.0
    for psi in (ONE, PsiSpec.power_law(1), PsiSpec.power_law(2)):
        for D in (3, 8):
            rep = verify_hadamard_equivalence(D, grid, psi)
            ratio = max(ratio, *rep.ratio_residuals.values())
            block = max(block, rep.max_block_residual)
            assert rep.verdict
        for q in grid:
            for n in (0, 1):
                ratio = max(ratio, float(abs(consistency_ratio(n, q) - 1)))
            block = max(block, float(np.max(np.abs(deformed_hadamard_block(3, q, psi) - hadamard_matrix().entries))))
    record("AC3 consistency ratio = 1 at n_hat in {0,1}", ratio, 1e-12)
    record("AC3 deformed Hadamard block = normalized Hadamard", block, 1e-12)


def test_ac4_gate_laws():
    h = hadamard_matrix()
    unitary = max(h.unitarity_residual(), float(np.max(np.abs((h @ h).entries - np.eye(2)))))
    rng = np.random.default_rng(2024)
    compose = norms = 0.0
    for _ in range(200):
        t1, t2 = rng.uniform(-10, 10, size=2)
        z = rng.normal(size=2) + 1j * rng.normal(size=2)
        st = QubitState(z[0], z[1])
        a = apply_phase_shift(apply_phase_shift(st, t1), t2).amplitudes
        b = apply_phase_shift(st, t1 + t2).amplitudes
        compose = max(compose, float(np.max(np.abs(a - b))))
        norms = max(norms, float(abs(apply_phase_shift(st, t1).norm_squared() - st.norm_squared())))
        unitary = max(unitary, phase_shift_matrix(t1).unitarity_residual())
    up = qubit_basis_state(1, 3, q_from_s(0.5), CaseParameters.case_one(0.5))
    flipped = apply_phase_shift(up, math.pi).vector
    exact = 0.0 if np.array_equal(flipped, np.array([-1, 0], dtype=np.clongdouble)) else math.inf
    record("AC4 H unitary and H^2 = I; phase unitary", unitary, 1e-12)
    record("AC4 phase gates compose additively", compose, 1e-12)
    record("AC4 phase gates preserve norms", norms, 1e-12)
    record("AC4 |1> at theta=pi maps to -|1> exactly", exact, 0.0)


def test_ac5_case_two_signature():
    thetas = (0.0, 0.3, math.pi / 3, math.pi / 2, math.pi, 4.0)
    ratio = theta_dep = 0.0
    for s in (0.1, 0.25, 0.5, 1.0):
        q = q_from_s(s)
        for n_hat in (1, 2, 3, 4, 5):
            want = math.exp(s * n_hat)
            for x in (0, 1):
                one = qubit_basis_state(x, 3, q, CaseParameters.case_one(s))
                two = qubit_basis_state(x, 3, q, CaseParameters.case_two(s, n_hat))
                ratio = max(ratio, float(abs(norm_ratio(two, one) - want)))
                ratio = max(ratio, float(abs(norm_ratio(apply_hadamard(two), apply_hadamard(one)) - want)))
                per_theta = []
                for th in thetas:
                    r = norm_ratio(apply_phase_shift(two, th), apply_phase_shift(one, th))
                    ratio = max(ratio, float(abs(r - want)))
                    per_theta.append(r)
                    ratio = max(ratio, float(abs(case_distinguishability(s, n_hat, th, x) - want)))
                theta_dep = max(theta_dep, float(max(per_theta) - min(per_theta)))
    record("AC5 Case II / Case I norm ratio = exp(s n_hat)", ratio, 1e-12)
    record("AC5 signature independent of theta", theta_dep, 1e-12)


def test_ac6_undeformed_continuity():
    s = 1e-8
    q = q_from_s(s)
    worst = 0.0
    for x in np.linspace(0, 10, 41):
        worst = max(worst, float(abs(q_number(x, q) - x)))
    for psi in (ONE, PsiSpec.power_law(1), PsiSpec.power_law(3)):
        f = realization_factor(8, q, psi, psi).entries
        worst = max(worst, float(np.max(np.abs(f - np.eye(8)))))
    for n in (0, 0.25, 1, 2):
        worst = max(worst, float(abs(consistency_ratio(n, q) - 1)))
    for n_hat in (1, 3, 5):
        one = qubit_basis_state(1, 3, q, CaseParameters.case_one(s))
        two = qubit_basis_state(1, 3, q, CaseParameters.case_two(s, n_hat))
        worst = max(worst, float(abs(norm_ratio(two, one) - 1)))
        worst = max(worst, float(abs(case_distinguishability(s, n_hat, 1.0) - 1)))
    record("AC6 deformed quantities match q=1 at s=1e-8", worst, 1e-6)


def test_ac7_bridge():
    rng = np.random.default_rng(99)
    worst = 0.0
    for D in (3, 8):
        for s, n_hat in ((0.0, None), (0.5, None), (1.0, None), (0.25, 2.0), (1.0, 5.0)):
            q = q_from_s(s)
            case = CaseParameters.case_one(s) if n_hat is None else CaseParameters.case_two(s, n_hat)
            psi = ONE if n_hat is None else PsiSpec.power_law(n_hat)
            realized = hadamard_two_mode_operator(D, q, psi)
            ladder = ladder_hadamard_operator(D, q)
            z = rng.normal(size=2) + 1j * rng.normal(size=2)
            states = [qubit_basis_state(x, D, q, case) for x in (0, 1)]
            states.append(QubitState(z[0], z[1], case.tag, case.scale()))
            for st in states:
                v = embed_qubit(st, D).amplitudes
                want = embed_qubit(apply_hadamard(st), D).amplitudes
                worst = max(worst, float(np.max(np.abs(realized @ v - want))))
                worst = max(worst, float(np.max(np.abs(ladder @ v - want))))
                theta = rng.uniform(-4, 4)
                want = embed_qubit(apply_phase_shift(st, theta), D).amplitudes
                worst = max(worst, float(np.max(np.abs(phase_two_mode_operator(D, theta) @ v - want))))
    record("AC7 2x2 gates agree with two-mode operators", worst, 1e-12)


def test_ac8_cli(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    status = cli.main(["verify", "--out", str(a)])
    cli.main(["verify", "--out", str(b)])
    rows = cli.run_verify(cli.parse_config(["verify"]))
    failed = sum(not r.passed for r in rows)
    identical = a.read_bytes() == b.read_bytes()
    golden = a.read_bytes() == (GOLDEN / "verify_default.json").read_bytes()
    c = tmp_path / "c.csv"
    cli.main(["verify", "--format", "csv", "--out", str(c)])
    golden_csv = c.read_bytes() == (GOLDEN / "verify_default.csv").read_bytes()
    bad = (status != 0) + failed + (not identical) + (not golden) + (not golden_csv)
    record(f"AC8 default verify exits 0, {len(rows)} rows pass, byte-identical, golden match", float(bad), 0.0)
