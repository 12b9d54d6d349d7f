"""Batch command-line surface: subcommands, config file handling, and
CSV/JSON emission with an append-only manifest."""

from __future__ import annotations

import argparse
import dataclasses
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .config import ScanConfig
from .errors import ConfigError, HardyZError
from .mollifier import b_coeffs, coeff_table
from .mollmeans import (
    cauchy_schwarz_check,
    mean_absZ_B2,
    mean_Z2_B4,
    mean_Z_B2,
    sign_split_check,
)
from .paircorr import maximize
from .rscore import critical_point
from .signmeasure import table_dyadic, table_fixed
from .zeroscan import classify, count_asymptotic, count_audit, find_zeros

_CFG_KEYS = ("rs_correction_order", "em_switch_t", "bisection_tol",
             "samples_per_mean_gap")


@dataclass
class RunManifest:
    command: str
    parameters: dict
    cfg: dict
    output_path: str
    started: str
    finished: str
    version: str


def _fmt(x) -> str:
    """Deterministic numeric formatting: 12 significant digits."""
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return format(float(x), ".12g")
    return str(x)


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def _write_json(path: Path, obj: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True, default=_fmt)
        fh.write("\n")


def load_config(path: str | None = None, flags: dict | None = None) -> ScanConfig:
    """Build a ScanConfig: flags override file values override defaults.

    The file is a flat JSON object restricted to the documented keys;
    anything else is rejected by name.
    """
    values = {}
    if path is not None:
        try:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(
                f"config parse error in {path} at line {exc.lineno}, "
                f"column {exc.colno}: {exc.msg}") from exc
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(raw, dict):
            raise ConfigError(f"config {path} must be a JSON object")
        for key, val in raw.items():
            if key not in _CFG_KEYS:
                raise ConfigError(f"unknown config key {key!r} in {path}")
            values[key] = val
    for key, val in (flags or {}).items():
        if val is not None:
            values[key] = val
    if "rs_correction_order" in values:
        values["rs_correction_order"] = int(values["rs_correction_order"])
    return ScanConfig(**values)


def _parse_t_list(text: str, flag: str) -> list[float]:
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            val = float(piece)
        except ValueError:
            raise _Usage(f"{flag}: {piece!r} is not a number")
        out.append(val)
    if not out:
        raise _Usage(f"{flag}: empty list")
    return out


class _Usage(Exception):
    pass


def _require_positive(value: float, flag: str) -> float:
    if not value > 0:
        raise _Usage(f"{flag} must be positive, got {value:g}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    # shared flags accepted before or after the subcommand; SUPPRESS keeps
    # the subparser from clobbering a value parsed at the top level
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out-dir", default=argparse.SUPPRESS,
                        help="output directory (default $HARDYZ_OUT_DIR "
                             "or ./hardyz-out)")
    common.add_argument("--config", default=argparse.SUPPRESS,
                        help="JSON config file")
    common.add_argument("--rs-correction-order", type=int,
                        default=argparse.SUPPRESS)
    common.add_argument("--em-switch-t", type=float, default=argparse.SUPPRESS)
    common.add_argument("--bisection-tol", type=float,
                        default=argparse.SUPPRESS)
    common.add_argument("--samples-per-mean-gap", type=float,
                        default=argparse.SUPPRESS)

    ap = argparse.ArgumentParser(
        prog="hardyz",
        parents=[common],
        description="Hardy Z-function scans, sign measures, mollified means, "
                    "and the pair-correlation bound.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add("z-eval", help="sample Z(t) on a uniform grid")
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--t1", type=float, required=True)
    p.add_argument("--samples", type=int, default=1000)

    p = add("zeros", help="locate and classify zeros on (t0, t1]")
    p.add_argument("--t0", type=float, required=True)
    p.add_argument("--t1", type=float, required=True)

    p = add("measure", help="sign measures on one interval (T, T+H]")
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--H", type=float, required=True)

    p = add("table1", help="dyadic-interval ratio table (H = T)")
    p.add_argument("--T", required=True, help="comma-separated T values")

    p = add("table2", help="fixed-window ratio table")
    p.add_argument("--T", required=True, help="comma-separated T values")
    p.add_argument("--H", type=float, default=100.0)

    p = add("mollifier", help="dump mollifier coefficients")
    p.add_argument("--X", type=float, required=True)
    p.add_argument("--with-b", action="store_true",
                   help="also dump b(m) for m <= floor(X)^2")

    p = add("means", help="mollified means and identity checks")
    p.add_argument("--T", required=True, help="comma-separated T values")
    p.add_argument("--theta", required=True, help="comma-separated exponents")
    p.add_argument("--skip-identities", action="store_true")

    p = add("paircorr", help="f(alpha), the objective, and A*")
    p.add_argument("--tol", type=float, default=1e-8)
    return ap


def _run_z_eval(args, cfg, out_dir):
    t0 = _require_positive(args.t0, "--t0")
    t1 = args.t1
    if not t1 > t0:
        raise _Usage(f"--t1 must exceed --t0, got {t1:g}")
    ts = np.linspace(t0, t1, max(2, args.samples))
    rows = []
    for t in ts:
        cp = critical_point(float(t), cfg)
        rows.append([cp.t, cp.z, cp.phase])
    path = out_dir / "z_eval.csv"
    _write_csv(path, ["t", "z", "phase"], rows)
    return path, {"t0": t0, "t1": t1, "samples": int(args.samples)}


def _run_zeros(args, cfg, out_dir):
    t0 = _require_positive(args.t0, "--t0")
    t1 = args.t1
    if not t1 > t0:
        raise _Usage(f"--t1 must exceed --t0, got {t1:g}")
    recs = classify(find_zeros(t0, t1, cfg), cfg)
    rows = [[r.gamma, r.bracket_width, r.derivative_sign] for r in recs]
    path = out_dir / "zeros.csv"
    _write_csv(path, ["gamma", "bracket_width", "derivative_sign"], rows)
    return path, {"t0": t0, "t1": t1, "count": len(rows),
                  "audit_expected": count_audit(t0, t1),
                  "n_asymptotic": count_asymptotic(t1) - count_asymptotic(t0)}


_MEASURE_HEADER = ["T", "H", "mu_plus", "mu_minus", "ratio_plus",
                   "zero_count", "audit_ok", "refinements", "status"]


def _measure_rows(reports):
    return [[r.T, r.H, r.mu_plus, r.mu_minus, r.ratio_plus, r.zero_count,
             r.audit_ok, r.grid_refinements, r.status] for r in reports]


def _run_measure(args, cfg, out_dir):
    T = _require_positive(args.T, "--T")
    H = _require_positive(args.H, "--H")
    reports = table_fixed([T], H, cfg)
    path = out_dir / "measure.csv"
    _write_csv(path, _MEASURE_HEADER, _measure_rows(reports))
    if reports[0].status != "ok":
        raise HardyZError(reports[0].status)
    return path, {"T": T, "H": H, "ratio_plus": reports[0].ratio_plus}


def _run_table1(args, cfg, out_dir):
    Ts = [_require_positive(T, "--T") for T in _parse_t_list(args.T, "--T")]
    reports = table_dyadic(Ts, cfg)
    path = out_dir / "table1.csv"
    _write_csv(path, _MEASURE_HEADER, _measure_rows(reports))
    return path, {"T": Ts, "rows": len(reports),
                  "failed": sum(r.status != "ok" for r in reports)}


def _run_table2(args, cfg, out_dir):
    Ts = [_require_positive(T, "--T") for T in _parse_t_list(args.T, "--T")]
    H = _require_positive(args.H, "--H")
    reports = table_fixed(Ts, H, cfg)
    path = out_dir / "table2.csv"
    _write_csv(path, _MEASURE_HEADER, _measure_rows(reports))
    return path, {"T": Ts, "H": H, "rows": len(reports),
                  "failed": sum(r.status != "ok" for r in reports)}


def _run_mollifier(args, cfg, out_dir):
    X = args.X
    if not X > 1:
        raise _Usage(f"--X must exceed 1, got {X:g}")
    table = coeff_table(X, with_b=args.with_b)
    path = out_dir / "mollifier.csv"
    rows = [[nu + 1, table.alpha[nu], table.beta[nu]]
            for nu in range(table.beta.size)]
    _write_csv(path, ["nu", "alpha", "beta"], rows)
    params = {"X": X, "length": int(table.beta.size)}
    if args.with_b:
        b = b_coeffs(table)
        bpath = out_dir / "mollifier_b.csv"
        _write_csv(bpath, ["m", "b"], [[m + 1, b[m]] for m in range(b.size)])
        params["b_path"] = str(bpath)
    return path, params


def _run_means(args, cfg, out_dir):
    Ts = [_require_positive(T, "--T") for T in _parse_t_list(args.T, "--T")]
    thetas = [_require_positive(x, "--theta")
              for x in _parse_t_list(args.theta, "--theta")]
    rows = []
    checks = []
    for T in Ts:
        if T < 100:
            raise _Usage(f"--T entries must be >= 100, got {T:g}")
        for theta in thetas:
            for name, fn in (("z_b2", mean_Z_B2), ("absz_b2", mean_absZ_B2),
                             ("z2_b4", mean_Z2_B4)):
                q = fn(T, theta, cfg)
                rows.append([q.T, q.theta, T ** theta, name, q.value,
                             q.value / T, q.error_estimate, q.nodes,
                             q.converged, q.theta_in_range])
            if not args.skip_identities:
                checks.append(sign_split_check(T, theta, cfg))
                checks.append(cauchy_schwarz_check(T, theta, cfg))
    path = out_dir / "means.csv"
    _write_csv(path, ["T", "theta", "X", "mean", "value", "value_over_T",
                      "error_estimate", "nodes", "converged",
                      "theta_in_range"], rows)
    report = {"rows": len(rows), "identity_checks": checks}
    _write_json(out_dir / "means_checks.json", report)
    bad = [c for c in checks if not c["ok"]]
    if bad:
        raise HardyZError(f"{len(bad)} identity check(s) failed; see "
                          f"{out_dir / 'means_checks.json'}")
    return path, {"T": Ts, "theta": thetas, "identities_ok": not bad}


def _run_paircorr(args, cfg, out_dir):
    if not args.tol > 0:
        raise _Usage(f"--tol must be positive, got {args.tol:g}")
    res = maximize(args.tol)
    path = out_dir / "paircorr.json"
    _write_json(path, {"A_star": res.A_star, "G_star": res.G_star,
                       "tol": res.quadrature_tol})
    samples = []
    g_cum = 0.0
    prev = None
    for a, f in res.f_samples:
        if prev is not None:
            g_cum += 0.5 * ((0.5 - f) + (0.5 - prev[1])) * (a - prev[0])
        prev = (a, f)
        samples.append([a, f, 0.5 - f, g_cum])
    _write_csv(out_dir / "paircorr_samples.csv",
               ["alpha", "f", "half_minus_f", "G_cumulative"], samples)
    return path, {"A_star": res.A_star, "G_star": res.G_star,
                  "tol": args.tol}


_RUNNERS = {
    "z-eval": _run_z_eval,
    "zeros": _run_zeros,
    "measure": _run_measure,
    "table1": _run_table1,
    "table2": _run_table2,
    "mollifier": _run_mollifier,
    "means": _run_means,
    "paircorr": _run_paircorr,
}


def run(argv=None) -> int:
    """Execute one subcommand; 0 on success, 1 domain error, 2 usage error."""
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    started = time.strftime("%Y-%m-%dT%H:%M:%S+00:00", time.gmtime())
    try:
        flags = {
            "rs_correction_order": getattr(args, "rs_correction_order", None),
            "em_switch_t": getattr(args, "em_switch_t", None),
            "bisection_tol": getattr(args, "bisection_tol", None),
            "samples_per_mean_gap": getattr(args, "samples_per_mean_gap", None),
        }
        cfg = load_config(getattr(args, "config", None), flags)
        out_dir = Path(getattr(args, "out_dir", None)
                       or os.environ.get("HARDYZ_OUT_DIR") or "hardyz-out")
        out_dir.mkdir(parents=True, exist_ok=True)
        path, params = _RUNNERS[args.command](args, cfg, out_dir)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except HardyZError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    finished = time.strftime("%Y-%m-%dT%H:%M:%S+00:00", time.gmtime())
    manifest = RunManifest(
        command=args.command, parameters=params,
        cfg=dataclasses.asdict(cfg), output_path=str(path),
        started=started, finished=finished, version=__version__)
    with open(out_dir / "manifest.jsonl", "a", encoding="utf-8") as fh:
        fh.write(json.dumps(dataclasses.asdict(manifest), sort_keys=True,
                            default=_fmt) + "\n")
    print(path)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
