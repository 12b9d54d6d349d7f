"""plotkit render --kind <k> --in <paths> --out <file>"""

from __future__ import annotations

import argparse
import sys

from .figures import FigureSpec, SchemaError, render


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="plotkit", description="Figures from hardyz result files.")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("render", help="render one figure")
    p.add_argument("--kind", required=True,
                   choices=["ztrace", "ratio_table", "paircorr_curves",
                            "gap_histogram"])
    p.add_argument("--in", dest="inputs", required=True, nargs="+",
                   help="input CSV/JSON file(s) from the hardyz CLI")
    p.add_argument("--out", required=True, help="output image file")
    p.add_argument("--title", default=None)
    p.add_argument("--xlabel", default=None)
    p.add_argument("--ylabel", default=None)
    return ap


def run(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    spec = FigureSpec(input_paths=tuple(args.inputs), figure_kind=args.kind,
                      output_path=args.out, title=args.title,
                      xlabel=args.xlabel, ylabel=args.ylabel)
    try:
        result = render(spec)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(result.output_path)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
