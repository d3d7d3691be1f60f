"""Command-line front end: ``shellbound <command> [flags]``.

Exit codes: 0 success, 2 invalid flags, 3 degenerate denominator,
4 invariant violation.  Numbers are written with 17 significant digits and
LF line endings so identical flags produce identical bytes.
"""
from __future__ import annotations

import argparse
import io
import json
import os
import sys
from contextlib import contextmanager
from itertools import product

import numpy as np

from . import bounds, checks, search, shell
from .classes import ClassSpec, special_class
from .errors import DegenerateDenominator, InvalidSpec, ShellboundError
from .series import MAX_ORDER

EXIT_OK, EXIT_FLAGS, EXIT_DEGENERATE, EXIT_INVARIANT = 0, 2, 3, 4
PARENTS = ("wsl", "rsl", "slb", "psl")
SPECIALS = ("fsl", "bsl", "hsl", "sl", "ksl")


class FlagError(Exception):
    pass


def _g(x) -> str:
    return f"{x:.17g}"


def _floats(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _csv(rows, header) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(_g(v) if isinstance(v, float) else str(v) for v in row) + "\n")
    return buf.getvalue()


@contextmanager
def _sink(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="\n", encoding="utf-8") as fh:
            yield fh


def _write(args, text: str) -> None:
    with _sink(args.output) as fh:
        fh.write(text)


# -- spec handling ---------------------------------------------------------
def _targets(args):
    """Expand spec flags into ``(target, parent_spec)`` pairs.

    ``target`` is what the bounds come from: a parent ClassSpec, or a
    Corollary for the named special cases so their reduced formulas are used.
    """
    name = args.cls.lower()
    if name in ("sl", "ksl") and args.gamma != [1.0]:
        raise FlagError(f"--class {name} has no gamma parameter")
    out = []
    for g, lam, al in product(args.gamma, args.lam, args.alpha):
        if name in PARENTS:
            spec = ClassSpec(name.upper(), g, lam, al)
            out.append((spec, spec))
        else:
            cor = bounds.Corollary(name.upper(), g, lam, al)
            out.append((cor, special_class(name, g, lam, al)))
    return out


def _single(args):
    if len(args.gamma) * len(args.lam) * len(args.alpha) * len(args.mu) != 1:
        raise FlagError(f"'{args.command}' takes a single value for --gamma, --lambda, --alpha and --mu")
    (target, parent), = _targets(args)
    return target, parent, args.mu[0]


def _seed(args) -> int:
    env = os.environ.get("SHELLBOUND_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise FlagError(f"SHELLBOUND_SEED must be an integer, got {env!r}") from exc
    return args.seed


def _spec_row(target, mu) -> dict:
    if isinstance(target, ClassSpec):
        return target.with_mu(mu).to_json()
    return {"tag": target.name, "gamma": target.gamma, "lam": target.lam, "alpha": target.alpha, "mu": mu}


# -- commands --------------------------------------------------------------
def cmd_ptilde(args) -> int:
    if not 1 <= args.order <= MAX_ORDER:
        raise FlagError(f"--order must lie in [1, {MAX_ORDER}]")
    coeffs = shell.ptilde_coeffs(args.order).coeffs.real
    rows = [(n, shell.lucas_weight(n), float(coeffs[n])) for n in range(1, args.order + 1)]
    if args.format == "json":
        _write(args, _dump_json([{"n": n, "weight": w, "coefficient": c} for n, w, c in rows]))
    else:
        _write(args, _csv(rows, ["n", "weight", "coefficient"]))
    return EXIT_OK


def cmd_curve(args) -> int:
    if not 0 < args.r <= 1:
        raise FlagError("--r must lie in (0, 1]")
    if args.count < 8:
        raise FlagError("--count must be at least 8")
    pts = shell.curve_sample(args.r, args.count)
    if args.format == "json":
        rows = [{"t": p.t, "r": p.r, "re": p.w.real, "im": p.w.imag, "residual": p.residual} for p in pts]
        _write(args, _dump_json(rows))
    else:
        _write(args, shell.curve_csv(pts))
    return EXIT_OK


def cmd_bounds(args) -> int:
    rows, degenerate = [], 0
    for target, _ in _targets(args):
        for mu in args.mu:
            try:
                rep = bounds.report(target, mu).to_json()
                err = None
            except DegenerateDenominator as exc:
                rep, err = None, str(exc)
                degenerate += 1
            rows.append({"spec": _spec_row(target, mu), "report": rep, "error": err})
    if args.format == "json":
        _write(args, _dump_json(rows))
    else:
        fields = list(bounds.BoundReport.__dataclass_fields__)
        header = ["tag", "gamma", "lam", "alpha", "mu", *fields, "error"]
        table = []
        for r in rows:
            s = r["spec"]
            vals = [r["report"][f] if r["report"] else "" for f in fields]
            table.append([s["tag"], float(s["gamma"]), float(s["lam"]), float(s["alpha"]), float(s["mu"]),
                          *vals, r["error"] or ""])
        _write(args, _csv(table, header))
    return EXIT_DEGENERATE if degenerate else EXIT_OK


def _probe_json(res: search.ProbeResult, mode: str) -> dict:
    out = res.to_json()
    out["mode"] = mode
    out["bounds"] = res.bounds.to_json() if res.bounds else None
    return out


def cmd_probe(args) -> int:
    _, parent, mu = _single(args)
    spec = parent.with_mu(mu)
    if args.steps is not None:
        if not 1 <= args.steps <= search.MAX_GRID_STEPS:
            raise FlagError(f"--steps must lie in [1, {search.MAX_GRID_STEPS}]")
        res, mode = search.grid_oracle(spec, args.steps), "grid"
    else:
        if args.samples < 1:
            raise FlagError("--samples must be >= 1")
        if args.dump:
            with open(args.dump, "w", newline="\n", encoding="utf-8") as fh:
                res = search.probe(spec, args.samples, _seed(args), args.family, dump=fh)
        else:
            res = search.probe(spec, args.samples, _seed(args), args.family)
        mode = "random"
    if args.format == "json":
        _write(args, _dump_json(_probe_json(res, mode)))
    else:
        header = ["tag", "gamma", "lam", "alpha", "mu", "samples", "max_a2", "max_a3", "max_fs",
                  "ratio_a2", "ratio_a3", "ratio_fs"]
        row = [spec.tag, float(spec.gamma), float(spec.lam), float(spec.alpha), float(spec.mu), res.samples,
               res.max_a2, res.max_a3, res.max_fs, res.ratio_a2, res.ratio_a3, res.ratio_fs]
        _write(args, _csv([row], header))
    return EXIT_OK


def _mu_grid(args) -> np.ndarray:
    if args.mu_min is None and args.mu_max is None:
        return np.asarray(args.mu, dtype=float)
    lo = args.mu_min if args.mu_min is not None else args.mu[0]
    hi = args.mu_max if args.mu_max is not None else lo
    if hi < lo or args.mu_step <= 0:
        raise FlagError("need --mu-min <= --mu-max and --mu-step > 0")
    n = int(np.floor((hi - lo) / args.mu_step + 1e-9)) + 1
    return lo + args.mu_step * np.arange(n)


def cmd_fekete(args) -> int:
    args_one = argparse.Namespace(**{**vars(args), "mu": [0.0]})
    target, parent, _ = _single(args_one)
    rows = []
    for mu in _mu_grid(args):
        rep = bounds.report(target, float(mu))
        achieved = search.grid_oracle(parent.with_mu(float(mu)), args.steps or 8).max_fs
        rows.append((float(mu), rep.h_mu, rep.branch, rep.fs_bound, achieved))
    header = ["mu", "h_mu", "branch", "fs_bound", "achieved"]
    if args.format == "json":
        _write(args, _dump_json([dict(zip(header, r)) for r in rows]))
    else:
        _write(args, _csv(rows, header))
    return EXIT_OK


def cmd_verify(args) -> int:
    failed = 0
    lines = []
    for name, ok, detail in checks.run_all(samples=args.samples, seed=_seed(args)):
        failed += not ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}\n")
    lines.append(f"{len(lines) - failed} passed, {failed} failed\n")
    _write(args, "".join(lines))
    return EXIT_INVARIANT if failed else EXIT_OK


COMMANDS = {
    "ptilde": cmd_ptilde,
    "curve": cmd_curve,
    "bounds": cmd_bounds,
    "probe": cmd_probe,
    "fekete": cmd_fekete,
    "verify": cmd_verify,
}
DEFAULT_FORMAT = {"ptilde": "csv", "curve": "csv", "bounds": "json", "probe": "json", "fekete": "csv", "verify": "csv"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="shellbound", description="Shell-like bi-univalent coefficient bounds.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--class", dest="cls", default="wsl", choices=PARENTS + SPECIALS)
    p.add_argument("--gamma", type=_floats, default=[1.0])
    p.add_argument("--lambda", dest="lam", type=_floats, default=[0.0])
    p.add_argument("--alpha", type=_floats, default=[0.0])
    p.add_argument("--mu", type=_floats, default=[0.0])
    p.add_argument("--mu-min", type=float)
    p.add_argument("--mu-max", type=float)
    p.add_argument("--mu-step", type=float, default=1e-3)
    p.add_argument("--output", "-o")
    p.add_argument("--format", choices=("csv", "json"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--order", type=int, default=12)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--count", type=int, default=4096)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--family", default="mixed", choices=("mixed", "rotation", "quadratic-blaschke", "body-direct"))
    p.add_argument("--steps", type=int, help="grid_oracle steps per axis (probe) or for the achieved column (fekete)")
    p.add_argument("--dump", help="probe: CSV of index,a2,a3,fs per sample")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.format = args.format or DEFAULT_FORMAT[args.command]
    try:
        return COMMANDS[args.command](args)
    except (FlagError, InvalidSpec) as exc:
        print(f"shellbound: error: {exc}", file=sys.stderr)
        return EXIT_FLAGS
    except DegenerateDenominator as exc:
        print(f"shellbound: degenerate: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ShellboundError as exc:
        print(f"shellbound: error: {exc}", file=sys.stderr)
        return EXIT_FLAGS


if __name__ == "__main__":
    sys.exit(main())
