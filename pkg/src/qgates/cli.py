"""Command-line front end: ``verify``, ``sweep`` and ``dump``.

Exit status is 0 when every report row passes, 1 when any check fails (or the
output cannot be written) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import itertools
import json
import logging
import math
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import fockspace, gates, schwinger
from .qalgebra import DomainError, PsiKind, PsiSpec, q_from_s

log = logging.getLogger("qgates")

CSV_HEADER = "s,n_hat,theta,quantity,computed,expected,residual,pass"
ROW_KEYS = ("s", "n_hat", "theta", "quantity", "computed", "expected", "residual", "pass")

DEFAULT_S = (0.1, 0.5, 1.0)
DEFAULT_N_HAT = (1.0, 2.0, 3.0)
DEFAULT_THETA = {
    "verify": (0.0, math.pi / 3, math.pi / 2, math.pi),
    "sweep": (0.0,),
    "dump": (0.0,),
}


@dataclass
class RunConfig:
    command: str
    s_values: list[float] = field(default_factory=lambda: list(DEFAULT_S))
    n_hat_values: list[float] = field(default_factory=lambda: list(DEFAULT_N_HAT))
    theta_values: list[float] = field(default_factory=lambda: [0.0])
    dim: int = fockspace.DEFAULT_DIM
    psi_kind: str = "constant"
    tolerance: float = 1e-10
    output_format: str = "json"
    output_path: str | None = None
    full_space: bool = False
    jobs: int = 1


@dataclass(frozen=True)
class ReportRow:
    s: float
    n_hat: float
    theta: float
    quantity: str
    computed: float
    expected: float
    residual: float
    passed: bool

    @classmethod
    def compare(cls, quantity, s, n_hat, theta, computed, expected, tolerance):
        computed, expected = float(computed), float(expected)
        residual = abs(computed - expected)
        return cls(float(s), float(n_hat), float(theta), quantity, computed, expected, residual,
                   bool(residual <= tolerance))

    @classmethod
    def failure(cls, quantity, s, n_hat, theta, expected, message):
        log.error("%s at s=%s n_hat=%s theta=%s: %s", quantity, s, n_hat, theta, message)
        return cls(float(s), float(n_hat), float(theta), quantity, math.nan, float(expected), math.inf, False)

    def sort_key(self):
        return (self.quantity, self.s, self.n_hat, self.theta)


# -- argument parsing --------------------------------------------------------

_PI_TERM = re.compile(r"^\s*([+-]?\d*\.?\d*)\s*\*?\s*pi\s*(?:/\s*(\d*\.?\d+))?\s*$")


def _parse_angle(token: str) -> float:
    m = _PI_TERM.match(token.lower())
    if m:
        coeff = m.group(1)
        k = 1.0 if coeff in ("", "+") else -1.0 if coeff == "-" else float(coeff)
        div = float(m.group(2)) if m.group(2) else 1.0
        return k * math.pi / div
    return float(token)


def _float_list(parse: Callable[[str], float] = float):
    def convert(text: str) -> list[float]:
        try:
            values = [parse(t) for t in text.split(",") if t.strip()]
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")
        if not values:
            raise argparse.ArgumentTypeError("empty list")
        return values
    return convert


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--s", type=_float_list(), help="deformation exponents s in [0, 1], comma separated")
    common.add_argument("--nhat", type=_float_list(), help="psi exponents n_hat >= 0, comma separated")
    common.add_argument("--theta", type=_float_list(_parse_angle), help="phase angles in radians (pi/3 style allowed)")
    common.add_argument("--dim", type=int, default=fockspace.DEFAULT_DIM, help="Fock truncation D (>= 3)")
    common.add_argument("--psi", choices=("constant", "power"), default="constant",
                        help="psi used for the Hadamard equivalence checks")
    common.add_argument("--tol", type=float, default=1e-10, help="pass tolerance on |computed - expected|")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("--jobs", type=int, default=1, help="threads for grid evaluation")

    parser = argparse.ArgumentParser(prog="qgates", description="q-deformed qubit gate verification")
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run the identity checks over the grid")
    v.add_argument("--full-space", action="store_true",
                   help="check a_q a_q+ relations on the top Fock level as well (fails by truncation)")
    sub.add_parser("sweep", parents=[common], help="Case II signature over the (s, n_hat, theta) product")
    sub.add_parser("dump", parents=[common], help="dump operator matrices and qubit states as JSON")
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig(
        command=ns.command,
        s_values=ns.s if ns.s is not None else list(DEFAULT_S),
        n_hat_values=ns.nhat if ns.nhat is not None else list(DEFAULT_N_HAT),
        theta_values=ns.theta if ns.theta is not None else list(DEFAULT_THETA[ns.command]),
        dim=ns.dim,
        psi_kind=ns.psi,
        tolerance=ns.tol,
        output_format=ns.format,
        output_path=ns.out,
        full_space=getattr(ns, "full_space", False),
        jobs=ns.jobs,
    )
    problems = []
    if any(not 0.0 <= s <= 1.0 for s in cfg.s_values):
        problems.append(f"--s values must lie in [0, 1]: {cfg.s_values}")
    if any(not n >= 0.0 or math.isinf(n) for n in cfg.n_hat_values):
        problems.append(f"--nhat values must be finite and >= 0: {cfg.n_hat_values}")
    if any(not math.isfinite(t) for t in cfg.theta_values):
        problems.append("--theta values must be finite")
    if cfg.dim < 3:
        problems.append(f"--dim must be >= 3, got {cfg.dim}")
    if not cfg.tolerance > 0:
        problems.append(f"--tol must be positive, got {cfg.tolerance}")
    if cfg.jobs < 1:
        problems.append("--jobs must be >= 1")
    if cfg.command == "dump" and cfg.output_format != "json":
        problems.append("dump only writes JSON")
    if problems:
        parser.error("; ".join(problems))
    return cfg


# -- checks ------------------------------------------------------------------

def _guarded(quantity, s, n_hat, theta, expected, tol, compute):
    try:
        return ReportRow.compare(quantity, s, n_hat, theta, compute(), expected, tol)
    except (DomainError, ArithmeticError, ValueError) as exc:
        return ReportRow.failure(quantity, s, n_hat, theta, expected, str(exc))


def _algebra_rows(cfg: RunConfig, s: float) -> list[ReportRow]:
    q = q_from_s(s)
    tol = cfg.tolerance
    rows = []
    try:
        reports = fockspace.algebra_residual(cfg.dim, q, full_space=cfg.full_space)
    except DomainError as exc:
        return [ReportRow.failure("algebra", s, 0, 0, 0.0, str(exc))]
    for rep in reports:
        rows.append(ReportRow.compare(f"algebra.{rep.relation.value}", s, 0, 0, rep.max_residual, 0.0, tol))
    measured, predicted = fockspace.truncation_defect(cfg.dim, q)
    rows.append(ReportRow.compare("algebra.truncation_defect", s, 0, 0, measured, predicted, tol))
    return rows


def _hadamard_rows(cfg: RunConfig, s: float) -> list[ReportRow]:
    q = q_from_s(s)
    tol = cfg.tolerance
    if cfg.psi_kind == "power":
        psis = [PsiSpec.power_law(n) for n in cfg.n_hat_values]
    else:
        psis = [PsiSpec.constant_one()]
    rows = []
    for psi in psis:
        n = psi.exponent
        try:
            rep = gates.verify_hadamard_equivalence(cfg.dim, [q], psi, tolerance=tol)
        except (DomainError, ArithmeticError) as exc:
            rows.append(ReportRow.failure("hadamard.equivalence", s, n, 0, 0.0, str(exc)))
            continue
        rows.append(ReportRow.compare("hadamard.factor_ratio", s, n, 0, rep.max_operator_residual, 0.0, tol))
        rows.append(ReportRow.compare("hadamard.block", s, n, 0, rep.max_block_residual, 0.0, tol))
        for level, r in rep.ratio_residuals.items():
            rows.append(ReportRow.compare(f"hadamard.consistency_ratio_n{level}", s, n, 0, r, 0.0, tol))
    return rows


def _case_two_rows(cfg: RunConfig, s: float, n_hat: float) -> list[ReportRow]:
    tol = cfg.tolerance
    expected = gates.expected_signature(s, n_hat)
    q = q_from_s(s)

    def states():
        one = schwinger.qubit_basis_state(1, cfg.dim, q, schwinger.CaseParameters.case_one(s))
        two = schwinger.qubit_basis_state(1, cfg.dim, q, schwinger.CaseParameters.case_two(s, n_hat))
        return one, two

    def before():
        one, two = states()
        return schwinger.norm_ratio(two, one)

    def after_hadamard():
        one, two = states()
        return schwinger.norm_ratio(gates.apply_hadamard(two), gates.apply_hadamard(one))

    rows = [
        _guarded("case2.norm_ratio", s, n_hat, 0, expected, tol, before),
        _guarded("hadamard.norm_ratio", s, n_hat, 0, expected, tol, after_hadamard),
    ]
    if s > 0:
        rows.append(_guarded("case2.recovered_n_hat", s, n_hat, 0, n_hat, tol,
                             lambda: schwinger.recovered_n_hat(schwinger.CaseParameters.case_two(s, n_hat))))
    for theta in cfg.theta_values:
        rows.append(_guarded("phase.distinguishability", s, n_hat, theta, expected, tol,
                             lambda theta=theta: gates.case_distinguishability(s, n_hat, theta)))
    return rows


def _evaluate(tasks, jobs: int) -> list[ReportRow]:
    if jobs > 1:
        with ThreadPoolExecutor(jobs) as pool:
            chunks = list(pool.map(lambda t: t(), tasks))
    else:
        chunks = [t() for t in tasks]
    rows = [row for chunk in chunks for row in chunk]
    return sorted(rows, key=ReportRow.sort_key)


def run_verify(cfg: RunConfig) -> list[ReportRow]:
    tasks = []
    for s in cfg.s_values:
        tasks.append(lambda s=s: _algebra_rows(cfg, s))
        tasks.append(lambda s=s: _hadamard_rows(cfg, s))
        for n in cfg.n_hat_values:
            if n > 0:
                tasks.append(lambda s=s, n=n: _case_two_rows(cfg, s, n))
    return _evaluate(tasks, cfg.jobs)


def sweep_points(cfg: RunConfig) -> list[tuple[float, float, float]]:
    return list(itertools.product(cfg.s_values, cfg.n_hat_values, cfg.theta_values))


def run_sweep(cfg: RunConfig) -> list[ReportRow]:
    def point(s, n, theta):
        expected = gates.expected_signature(s, n)
        return [_guarded("phase.distinguishability", s, n, theta, expected, cfg.tolerance,
                         lambda: gates.case_distinguishability(s, n, theta))]

    tasks = [lambda p=p: point(*p) for p in sweep_points(cfg)]
    return _evaluate(tasks, cfg.jobs)


def run_dump(cfg: RunConfig) -> dict:
    psi_for = (lambda n: PsiSpec.power_law(n)) if cfg.psi_kind == "power" else (lambda n: PsiSpec.constant_one())
    entries = []
    for s in cfg.s_values:
        q = q_from_s(s)
        for n in (cfg.n_hat_values if cfg.psi_kind == "power" else [0.0]):
            psi = psi_for(n)
            ops = {
                "annihilator": fockspace.build_annihilator(cfg.dim),
                "q_annihilator": fockspace.build_q_annihilator(cfg.dim, q),
                "realization_factor": fockspace.realization_factor(cfg.dim, q, psi, psi),
                "realized_q_annihilator": fockspace.harmonic_realized_q_annihilator(cfg.dim, q, psi, psi),
            }
            case = (schwinger.CaseParameters.case_two(s, n) if psi.kind is PsiKind.POWER_LAW
                    else schwinger.CaseParameters.case_one(s))
            states = [schwinger.qubit_basis_state(x, cfg.dim, q, case).to_dict(label=x) for x in (1, 0)]
            entries.append({
                "s": s, "q": q.q, "n_hat": n, "psi": str(psi), "dim": cfg.dim,
                "operators": {name: op.to_pairs() for name, op in ops.items()},
                "qubit_states": states,
            })
    return {"entries": entries}


# -- output ------------------------------------------------------------------

def _fmt(x: float, json_mode: bool) -> str:
    if math.isfinite(x):
        return format(x, ".17g")
    if json_mode:
        return "null"
    return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")


def format_csv(rows: list[ReportRow]) -> str:
    lines = [CSV_HEADER]
    for r in sorted(rows, key=ReportRow.sort_key):
        lines.append(",".join([
            _fmt(r.s, False), _fmt(r.n_hat, False), _fmt(r.theta, False), r.quantity,
            _fmt(r.computed, False), _fmt(r.expected, False), _fmt(r.residual, False),
            "true" if r.passed else "false",
        ]))
    return "\n".join(lines) + "\n"


def format_json(rows: list[ReportRow]) -> str:
    if not rows:
        return "[]\n"
    objs = []
    for r in sorted(rows, key=ReportRow.sort_key):
        values = [_fmt(r.s, True), _fmt(r.n_hat, True), _fmt(r.theta, True), json.dumps(r.quantity),
                  _fmt(r.computed, True), _fmt(r.expected, True), _fmt(r.residual, True),
                  "true" if r.passed else "false"]
        objs.append("  {" + ", ".join(f'"{k}": {v}' for k, v in zip(ROW_KEYS, values)) + "}")
    return "[\n" + ",\n".join(objs) + "\n]\n"


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def emit(rows: list[ReportRow], output_format: str = "json", path: str | None = None) -> None:
    text = format_csv(rows) if output_format == "csv" else format_json(rows)
    _write(text, path)


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    cfg = parse_config(argv)
    try:
        if cfg.command == "dump":
            _write(json.dumps(run_dump(cfg), indent=1) + "\n", cfg.output_path)
            return 0
        rows = run_verify(cfg) if cfg.command == "verify" else run_sweep(cfg)
        emit(rows, cfg.output_format, cfg.output_path)
    except OSError as exc:
        print(f"qgates: cannot write output: {exc}", file=sys.stderr)
        return 1
    failed = sum(not r.passed for r in rows)
    if failed:
        print(f"qgates: {failed} of {len(rows)} checks failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
