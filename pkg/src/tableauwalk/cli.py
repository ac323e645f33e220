"""Command-line front end.

Exit codes: 0 on success, 1 when ``verify`` finds a failure, 2 on bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import continuum, moments, stats
from .export import curve_csv, kernel_csv, path_to_json, slices_to_json, tableau_to_json
from .partitions import Partition
from .tableaux import count_formula, enumerate_all, sample_uniform
from .walk import PowerK, QDeformed, STANDARD, WalkConfig, evolve_distribution, simulate, volume
from .verify import run_verification


class UsageError(Exception):
    pass


def parse_shape(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    try:
        return Partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad shape {text!r}: {exc}") from None


def parse_grid(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"bad grid {text!r}") from None


def parse_weights(text: str | None):
    if not text or text == "standard":
        return STANDARD
    kind, _, arg = text.partition(":")
    try:
        if kind == "power":
            return PowerK(int(arg))
        if kind == "q":
            return QDeformed(float(arg))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError(f"unknown weights {text!r}; use standard, power:K or q:Q")


def make_config(n: int, y0: int, weights=STANDARD) -> WalkConfig:
    try:
        return WalkConfig(n, y0, weights)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def read_campaign_config(path: str) -> stats.Campaign:
    """Flat ``key = value`` file with keys n, y0, samples, seed, observables, bins (and optional weights)."""
    values: dict[str, str] = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, val = line.partition("=")
            if not sep:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            values[key.strip().lower()] = val.strip()
    unknown = set(values) - {"n", "y0", "samples", "seed", "observables", "bins", "weights"}
    if unknown:
        raise UsageError(f"unknown campaign keys: {sorted(unknown)}")
    try:
        cfg = make_config(int(values["n"]), int(values.get("y0", 0)), parse_weights(values.get("weights")))
        observables = _split_observables(values.get("observables", "volume"))
        return stats.Campaign(
            cfg,
            samples=int(values.get("samples", 1000)),
            seed=int(values.get("seed", 0)),
            observables=[stats.parse_observable(o) for o in observables],
            bins=int(values.get("bins", 50)),
        )
    except KeyError as exc:
        raise UsageError(f"missing campaign key {exc}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _split_observables(text: str) -> list[str]:
    # commas inside parentheses belong to the observable
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur += ch
    out.append(cur)
    return [o.strip() for o in out if o.strip()]


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_sample(args, out):
    shape = parse_shape(args.shape)
    if count_formula(shape, args.length) == 0:
        raise UsageError(f"no oscillating tableaux of shape {list(shape)} and length {args.length}")
    t = sample_uniform(shape, args.length, args.seed)
    out.write(tableau_to_json(t) + "\n")


def cmd_enumerate(args, out):
    shape = parse_shape(args.shape)
    try:
        ts = enumerate_all(shape, args.length, bound=args.bound)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(json.dumps([t.to_list() for t in ts]) + "\n")


def cmd_count(args, out):
    out.write(f"{count_formula(parse_shape(args.shape), args.length)}\n")


def cmd_simulate(args, out):
    cfg = make_config(args.n, args.y0, parse_weights(args.weights))
    path = simulate(cfg, args.seed)
    if args.format == "csv":
        out.write(_csv(enumerate(path), ["X", "H"]))
    else:
        out.write(path_to_json(path) + "\n")


def cmd_distribution(args, out):
    cfg = make_config(args.n, args.y0, parse_weights(args.weights))
    slices = evolve_distribution(cfg)
    if args.format == "csv":
        rows = [(s.X, Y, str(p)) for s in slices for Y, p in s.probs.items()]
        out.write(_csv(rows, ["X", "Y", "probability"]))
    else:
        out.write(slices_to_json(slices) + "\n")


def cmd_moments(args, out):
    make_config(args.n, args.y0)
    table = moments.moment_table(args.n, args.y0, args.order)
    if args.format == "csv":
        out.write(table.to_csv(closed_form=True))
        return
    rows = []
    for X in range(args.n + 1):
        for n in range(args.order + 1):
            rows.append({
                "X": X,
                "n": n,
                "value": str(table[X, n]),
                "closed_form": moments._closed_form_or_blank(args.n, args.y0, X, n) or None,
            })
    out.write(json.dumps(rows) + "\n")


def cmd_covariance(args, out):
    make_config(args.n, args.y0)
    try:
        if args.x1 == args.x2:
            value = moments.closed_form_variance(args.n, args.y0, args.x1)
        else:
            lo, hi = sorted((args.x1, args.x2))
            value = moments.covariance(args.n, args.y0, lo, hi)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        out.write(json.dumps({"value": str(value), "float": float(value)}) + "\n")
    else:
        out.write(f"{value}\n")


def cmd_volume(args, out):
    cfg = make_config(args.n, args.y0)
    mean, var = moments.volume_mean(cfg.N, cfg.Y0), moments.volume_variance(cfg.N, cfg.Y0)
    payload = {"mean": str(mean), "variance": str(var)}
    if args.seed is not None:
        payload["sample_volume"] = volume(simulate(cfg, args.seed))
    out.write(json.dumps(payload) + "\n")


def cmd_limit(args, out):
    points = parse_grid(args.grid)
    try:
        grid = continuum.covariance_grid(points)
        det, inv = continuum.covariance_matrix_analysis(points)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "csv":
        out.write(kernel_csv(grid.points, grid.matrix))
        out.write("\n")
        out.write(curve_csv(grid.points, continuum.fluctuation_variance(grid.points), ("x", "variance")))
        return
    payload = {
        "points": grid.points.tolist(),
        "mean_curve": continuum.mean_curve(grid.points).tolist(),
        "variance": continuum.fluctuation_variance(grid.points).tolist(),
        "kernel": grid.matrix.tolist(),
        "determinant": det,
        "determinant_direct": float(np.linalg.det(grid.matrix)),
        "inverse": inv.tolist(),
        "inverse_residual": float(np.max(np.abs(inv @ grid.matrix - np.eye(len(points))))),
    }
    out.write(json.dumps(payload) + "\n")


def cmd_verify(args, out):
    results = run_verification(args.max_n)
    for r in results:
        out.write(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.detail}\n")
    return 0 if all(r.passed for r in results) else 1


def cmd_campaign(args, out):
    report = stats.run_campaign(read_campaign_config(args.config))
    out.write(report.to_csv() if args.format == "csv" else report.to_json() + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tableauwalk", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.set_defaults(func=func)
        return p

    p = add("sample", cmd_sample, "draw a uniform oscillating tableau")
    p.add_argument("--shape", default="")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = add("enumerate", cmd_enumerate, "list every oscillating tableau")
    p.add_argument("--shape", default="")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--bound", type=int, default=10)

    p = add("count", cmd_count, "number of oscillating tableaux")
    p.add_argument("--shape", default="")
    p.add_argument("--length", type=int, required=True)

    for name, func, help in (
        ("simulate", cmd_simulate, "simulate one walk"),
        ("distribution", cmd_distribution, "exact distribution of H(X) for every X"),
    ):
        p = add(name, func, help)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--y0", type=int, default=0)
        p.add_argument("--weights", default="standard", help="standard, power:K or q:Q")
        if name == "simulate":
            p.add_argument("--seed", type=int, default=0)

    p = add("moments", cmd_moments, "exact moment table with closed forms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y0", type=int, default=0)
    p.add_argument("--order", type=int, default=2)

    p = add("covariance", cmd_covariance, "exact Cov[H(x1), H(x2)]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y0", type=int, default=0)
    p.add_argument("--x1", type=int, required=True)
    p.add_argument("--x2", type=int, required=True)
    p.set_defaults(format="text")

    p = add("volume", cmd_volume, "exact mean and variance of the volume")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--y0", type=int, default=0)
    p.add_argument("--seed", type=int, default=None)

    p = add("limit", cmd_limit, "limiting kernel and its matrix identities")
    p.add_argument("--grid", required=True)

    p = add("verify", cmd_verify, "run the exact oracle suite")
    p.add_argument("--max-n", type=int, default=10)

    p = add("campaign", cmd_campaign, "Monte Carlo campaign from a config file")
    p.add_argument("--config", required=True)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out) or 0
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
