"""Published bounds against the exact grid maximum and a random probe, one row per class."""
import argparse
import csv
import sys

from shellbound import search
from shellbound.classes import ClassSpec

ROWS = [
    ("SL", ClassSpec("PSL", 1.0, 0.0)),
    ("KSL", ClassSpec("PSL", 1.0, 1.0)),
    ("PSL(0.5)", ClassSpec("PSL", 1.0, 0.5)),
    ("HSL(1)", ClassSpec("WSL", 1.0, 0.0, 1.0)),
    ("WSL(1,0,0)", ClassSpec("WSL", 1.0, 0.0, 0.0)),
    ("WSL(0.5,1,3)", ClassSpec("WSL", 0.5, 1.0, 3.0)),
    ("RSL(2,0.5)", ClassSpec("RSL", 2.0, 0.5)),
    ("SLB(1.5)", ClassSpec("SLB", 1.0, 1.5)),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--mu", type=float, default=0.0)
    ap.add_argument("--steps", type=int, default=32)
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["class", "a2_bound", "grid_a2", "probe_a2", "a3_bound", "grid_a3", "fs_bound", "grid_fs", "probe_fs"])
    for name, spec in ROWS:
        spec = spec.with_mu(args.mu)
        grid = search.grid_oracle(spec, args.steps)
        rnd = search.probe(spec, args.samples, args.seed)
        b = grid.bounds
        out.writerow(
            [name] + [f"{v:.10f}" for v in (b.a2_bound, grid.max_a2, rnd.max_a2, b.a3_bound, grid.max_a3, b.fs_bound, grid.max_fs, rnd.max_fs)]
        )


if __name__ == "__main__":
    main()
