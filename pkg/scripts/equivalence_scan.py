"""Scan the deformed/ordinary Hadamard equivalence over q for several psi choices.

The last line pairs psi1 = q^1 with psi2 = 1, which breaks the equivalence.
"""
import argparse

from qgates.gates import uniform_q_grid, verify_hadamard_equivalence
from qgates.qalgebra import PsiSpec

CASES = [
    ("psi1 = psi2 = 1", PsiSpec.constant_one(), None),
    ("psi1 = psi2 = q", PsiSpec.power_law(1), None),
    ("psi1 = psi2 = q^2", PsiSpec.power_law(2), None),
    ("psi1 = psi2 = q^3.5", PsiSpec.power_law(3.5), None),
    ("psi1 = q, psi2 = 1", PsiSpec.power_law(1), PsiSpec.constant_one()),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=100)
    ap.add_argument("--dim", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=4)
    args = ap.parse_args()

    grid = uniform_q_grid(args.points)
    print(f"{'psi':22s} {'factor':>10s} {'ratio n=0':>10s} {'ratio n=1':>10s} {'block':>10s}  verdict")
    for name, psi, partner in CASES:
        rep = verify_hadamard_equivalence(args.dim, grid, psi, psi_partner=partner, jobs=args.jobs)
        print(f"{name:22s} {rep.max_operator_residual:10.2e} {rep.ratio_residuals[0]:10.2e} "
              f"{rep.ratio_residuals[1]:10.2e} {rep.max_block_residual:10.2e}  {rep.verdict}")


if __name__ == "__main__":
    main()
