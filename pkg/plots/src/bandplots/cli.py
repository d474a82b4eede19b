"""Script entry point: render one figure from one artifact."""

from __future__ import annotations

import argparse
import sys

from .figures import FIGURE_IDS, FigureSpec, render
from .io import PlotsError


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="render", description="Regenerate a figure from crossband artifacts."
    )
    parser.add_argument("--figure", required=True, choices=FIGURE_IDS)
    parser.add_argument("--in", dest="data_path", required=True, metavar="CSV")
    parser.add_argument("--out", dest="out_path", required=True, metavar="IMAGE")
    parser.add_argument("--min-json", dest="min_json",
                        help="min_result.json supplying the fig3 constant")
    parser.add_argument("--s0", type=float,
                        help="override the fig3 limit constant")
    parser.add_argument("--epsilon", type=float,
                        help="half-angle parameter for the fig4/fig5 overlay")
    parser.add_argument("--alpha0", type=float,
                        help="band minimizer for the fig4/fig5 markers")
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        out = render(FigureSpec(
            figure=args.figure,
            data_path=args.data_path,
            out_path=args.out_path,
            min_json=args.min_json,
            s0=args.s0,
            epsilon=args.epsilon,
            alpha0=args.alpha0,
        ))
    except (PlotsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
