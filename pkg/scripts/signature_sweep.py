"""Tabulate the Case II / Case I norm ratio over an (s, n_hat) grid.

    python scripts/signature_sweep.py --points 11 --nhat-max 5 --out signature.csv
"""
import argparse
import csv
import math
import sys

import numpy as np

from qgates.gates import apply_hadamard, apply_phase_shift
from qgates.qalgebra import q_from_s
from qgates.schwinger import CaseParameters, norm_ratio, qubit_basis_state


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=11, help="s samples in (0, 1]")
    ap.add_argument("--nhat-max", type=int, default=5)
    ap.add_argument("--theta", type=float, default=math.pi / 4)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    rows = []
    for s in np.linspace(1 / args.points, 1.0, args.points):
        s = float(s)
        q = q_from_s(s)
        for n_hat in range(1, args.nhat_max + 1):
            one = qubit_basis_state(1, 3, q, CaseParameters.case_one(s))
            two = qubit_basis_state(1, 3, q, CaseParameters.case_two(s, n_hat))
            bare = float(norm_ratio(two, one))
            after_h = float(norm_ratio(apply_hadamard(two), apply_hadamard(one)))
            after_p = float(norm_ratio(apply_phase_shift(two, args.theta), apply_phase_shift(one, args.theta)))
            rows.append((s, n_hat, bare, after_h, after_p, math.exp(s * n_hat)))

    out = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(out)
    w.writerow(["s", "n_hat", "ratio", "ratio_after_hadamard", "ratio_after_phase", "exp_s_nhat"])
    for r in rows:
        w.writerow([f"{r[0]:.4f}", r[1]] + [f"{x:.12g}" for x in r[2:]])
    worst = max(max(abs(x - r[5]) for x in r[2:5]) for r in rows)
    print(f"# worst |ratio - exp(s n_hat)| = {worst:.3e}", file=sys.stderr)


if __name__ == "__main__":
    main()
