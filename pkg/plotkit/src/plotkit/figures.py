"""The four figure kinds and their schema-checked readers.

Each kind consumes exactly the files its producing subcommand writes:

* ztrace          <- z-eval CSV (t, z, phase)
* ratio_table     <- table1/table2 CSV (sign-measure schema)
* paircorr_curves <- paircorr samples CSV + paircorr JSON (for A*)
* gap_histogram   <- zeros CSV (gamma, bracket_width, derivative_sign)

Rendering is deterministic in the plotted data: RenderResult.series holds
every array that lands on the axes, and tests compare those across runs.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

TWO_PI = 2.0 * math.pi


class SchemaError(ValueError):
    """An input file is missing, empty, or lacks a required column."""


@dataclass(frozen=True)
class FigureSpec:
    """What to draw: input files, figure kind, output path, style knobs."""

    input_paths: tuple[str, ...]
    figure_kind: str  # ztrace | ratio_table | paircorr_curves | gap_histogram
    output_path: str
    title: str | None = None
    xlabel: str | None = None
    ylabel: str | None = None


@dataclass
class RenderResult:
    """Where the figure went plus the exact data series that were drawn."""

    output_path: Path
    series: dict = field(default_factory=dict)


def _read_csv(path: str, required: tuple[str, ...]) -> dict[str, list[str]]:
    p = Path(path)
    if not p.exists():
        raise SchemaError(f"input file does not exist: {path}")
    with open(p, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        cols = reader.fieldnames or []
        for col in required:
            if col not in cols:
                raise SchemaError(
                    f"{path}: missing required column {col!r} "
                    f"(found {cols})")
        rows = list(reader)
    out = {c: [r[c] for r in rows] for c in cols}
    return out


def _floats(table: dict, col: str) -> np.ndarray:
    return np.array([float(v) for v in table[col]], dtype=float)


# ----------------------------------------------------------------------
# figure builders
# ----------------------------------------------------------------------

def _fig_ztrace(spec: FigureSpec):
    table = _read_csv(spec.input_paths[0], ("t", "z"))
    if not table["t"]:
        raise SchemaError(f"{spec.input_paths[0]}: no sample rows")
    t = _floats(table, "t")
    z = _floats(table, "z")
    fig, ax = plt.subplots(figsize=(9, 4))
    ax.plot(t, z, lw=0.9, color="#1f3b73")
    ax.fill_between(t, 0.0, z, where=z > 0, color="#2a9d8f", alpha=0.45,
                    label="Z > 0")
    ax.fill_between(t, 0.0, z, where=z < 0, color="#e76f51", alpha=0.45,
                    label="Z < 0")
    ax.axhline(0.0, color="black", lw=0.8)
    ax.set_xlabel(spec.xlabel or "t")
    ax.set_ylabel(spec.ylabel or "Z(t)")
    ax.set_title(spec.title or "Hardy Z with sign regions shaded")
    ax.legend(loc="upper right", fontsize=8)
    return fig, {"t": t, "z": z}


def _fig_ratio_table(spec: FigureSpec):
    table = _read_csv(spec.input_paths[0], ("T", "ratio_plus", "status"))
    ok = [i for i, s in enumerate(table["status"]) if s == "ok"]
    if not ok:
        raise SchemaError(f"{spec.input_paths[0]}: no successful rows")
    T = _floats(table, "T")[ok]
    ratio = _floats(table, "ratio_plus")[ok]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.axhline(1.0, color="gray", lw=1.0, ls="--", label="conjectured value")
    ax.plot(T, ratio, "o-", color="#1f3b73", ms=6)
    ax.set_xscale("log")
    ax.set_xlabel(spec.xlabel or "T")
    ax.set_ylabel(spec.ylabel or "measure ratio to H/2")
    ax.set_title(spec.title or "Positive-measure ratios")
    ax.legend(fontsize=8)
    return fig, {"T": T, "ratio_plus": ratio}


def _fig_paircorr_curves(spec: FigureSpec):
    csv_path = next((p for p in spec.input_paths if p.endswith(".csv")), None)
    json_path = next((p for p in spec.input_paths if p.endswith(".json")), None)
    if csv_path is None or json_path is None:
        raise SchemaError("paircorr_curves needs one samples CSV and the "
                          "paircorr JSON (A_star, G_star)")
    table = _read_csv(csv_path, ("alpha", "f", "half_minus_f", "G_cumulative"))
    if not table["alpha"]:
        raise SchemaError(f"{csv_path}: no sample rows")
    jp = Path(json_path)
    if not jp.exists():
        raise SchemaError(f"input file does not exist: {json_path}")
    meta = json.loads(jp.read_text())
    for key in ("A_star", "G_star"):
        if key not in meta:
            raise SchemaError(f"{json_path}: missing required field {key!r}")
    a_star = float(meta["A_star"])

    alpha = _floats(table, "alpha")
    f = _floats(table, "f")
    hmf = _floats(table, "half_minus_f")
    g = _floats(table, "G_cumulative")
    fig, ax = plt.subplots(figsize=(7.5, 4.8))
    ax.plot(alpha, f, label="f(alpha)", color="#1f3b73")
    ax.plot(alpha, hmf, label="1/2 - f(alpha)", color="#2a9d8f")
    ax.plot(alpha, g, label="G(A) (running)", color="#e76f51")
    ax.axvline(a_star, color="black", lw=1.0, ls=":",
               label=f"A* = {a_star:.4f}")
    ax.axhline(0.0, color="gray", lw=0.6)
    ax.set_xlabel(spec.xlabel or "alpha")
    ax.set_ylabel(spec.ylabel or "")
    ax.set_title(spec.title
                 or f"Pair-correlation curves (G* = {float(meta['G_star']):.5f})")
    ax.legend(fontsize=8)
    return fig, {"alpha": alpha, "f": f, "half_minus_f": hmf,
                 "G_cumulative": g, "A_star_marker": a_star}


def _fig_gap_histogram(spec: FigureSpec):
    table = _read_csv(spec.input_paths[0], ("gamma",))
    if not table["gamma"]:
        raise SchemaError(f"{spec.input_paths[0]}: no zero rows")
    gamma = _floats(table, "gamma")
    if gamma.size < 2:
        raise SchemaError(f"{spec.input_paths[0]}: need at least two zeros "
                          "for a gap histogram")
    gaps = np.diff(gamma)
    u = gaps * np.log(gamma[:-1] / TWO_PI) / TWO_PI
    fig, ax = plt.subplots(figsize=(7, 4.5))
    hi = float(np.ceil(u.max() * 4) / 4 + 0.25)
    counts, edges, _ = ax.hist(u, bins=24, range=(0.0, hi), density=True,
                               color="#8ab6d6", edgecolor="white",
                               label="normalized nearest-neighbour gaps")
    grid = np.linspace(0.0, hi, 400)
    dens = 1.0 - np.sinc(grid) ** 2
    ax.plot(grid, dens, color="#b0413e", lw=1.6,
            label="1 - (sin pi u / pi u)^2")
    ax.set_xlabel(spec.xlabel or "normalized gap u")
    ax.set_ylabel(spec.ylabel or "density")
    ax.set_title(spec.title or "Zero gaps vs the pair-correlation density")
    ax.legend(fontsize=8)
    return fig, {"hist_density": counts, "bin_edges": edges,
                 "overlay_u": grid, "overlay_density": dens}


_BUILDERS = {
    "ztrace": _fig_ztrace,
    "ratio_table": _fig_ratio_table,
    "paircorr_curves": _fig_paircorr_curves,
    "gap_histogram": _fig_gap_histogram,
}


def render(spec: FigureSpec) -> RenderResult:
    """Build the figure for spec and write it to spec.output_path.

    Inputs are opened read-only; the returned series are exactly the
    arrays placed on the axes, so reruns can be compared bitwise.
    """
    if spec.figure_kind not in _BUILDERS:
        raise SchemaError(
            f"unknown figure kind {spec.figure_kind!r}; expected one of "
            f"{sorted(_BUILDERS)}")
    if not spec.input_paths:
        raise SchemaError("FigureSpec.input_paths is empty")
    fig, series = _BUILDERS[spec.figure_kind](spec)
    out = Path(spec.output_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return RenderResult(output_path=out, series=series)
