"""Fekete-Szego bound across mu for one class, with the grid maximum and the branch switch points."""
import argparse
import csv
import sys

import numpy as np

from shellbound import bounds, search
from shellbound.classes import ClassSpec


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tag", default="PSL")
    ap.add_argument("--gamma", type=float, default=1.0)
    ap.add_argument("--lam", type=float, default=0.0)
    ap.add_argument("--alpha", type=float, default=0.0)
    ap.add_argument("--mu-min", type=float, default=-1.0)
    ap.add_argument("--mu-max", type=float, default=3.0)
    ap.add_argument("--points", type=int, default=41)
    ap.add_argument("--steps", type=int, default=16)
    args = ap.parse_args()

    spec = ClassSpec(args.tag, args.gamma, args.lam, args.alpha)
    mus = np.linspace(args.mu_min, args.mu_max, args.points)
    reports = bounds.fekete_sweep(spec, mus)
    switches = [(mus[i] + mus[i + 1]) / 2 for i in range(len(mus) - 1) if reports[i].branch != reports[i + 1].branch]
    print(f"# {spec.tag} gamma={spec.gamma} lam={spec.lam} alpha={spec.alpha}; branch changes near mu = "
          + ", ".join(f"{m:.4f}" for m in switches), file=sys.stderr)

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["mu", "h_mu", "branch", "fs_bound", "grid_fs", "ratio"])
    for mu, rep in zip(mus, reports):
        grid = search.grid_oracle(spec.with_mu(float(mu)), args.steps)
        out.writerow([f"{mu:.6f}", f"{rep.h_mu:.10f}", rep.branch, f"{rep.fs_bound:.10f}", f"{grid.max_fs:.10f}", f"{grid.ratio_fs:.6f}"])


if __name__ == "__main__":
    main()
