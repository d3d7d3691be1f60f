"""Image of |z| = r under the shell function: loop detection and the minimum real part per radius."""
import argparse
import csv
import sys

from shellbound import shell


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--radii", default="0.3,0.382,0.5,0.6,0.7,0.9,0.99,0.999")
    ap.add_argument("--count", type=int, default=4096)
    args = ap.parse_args()

    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["r", "min_real_part", "has_loop"])
    for r in (float(x) for x in args.radii.split(",")):
        out.writerow([r, f"{shell.min_real_part(r, args.count):.10f}", shell.curve_has_loop(r, args.count)])
    print(f"# r0 = {shell.R0:.10f}, beta = {shell.BETA:.10f}", file=sys.stderr)


if __name__ == "__main__":
    main()
