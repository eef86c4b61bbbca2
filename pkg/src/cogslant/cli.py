"""Command line front end.

    cogslant detect IMG [--threshold T] [--annotate OUT]
    cogslant correct IMG -o OUT [--threshold T] [--report]
    cogslant synth --angle DEG IMG -o OUT
    cogslant bench DIR [--format csv|md] [-o REPORT]

Exit status: 0 success, 1 usage error, 2 processing error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import bench
from .bench import accuracy, annotate
from .correct import correct
from .detect import estimate_skew
from .errors import SlantError
from .raster import DEFAULT_THRESHOLD, binarize, load_image, save_image
from .shear import ShearSpec, shear

EXIT_OK, EXIT_USAGE, EXIT_PROCESSING = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _threshold(text: str) -> float:
    value = float(text)
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError("threshold must lie in (0, 1)")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cogslant", description="Per-glyph slant detection and correction.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("detect", help="estimate the slant of a glyph image")
    p.add_argument("image", type=Path)
    p.add_argument("--threshold", type=_threshold, default=DEFAULT_THRESHOLD)
    p.add_argument("--annotate", type=Path, metavar="OUT", help="write an overlay image")

    p = sub.add_parser("correct", help="remove the slant by row shifting")
    p.add_argument("image", type=Path)
    p.add_argument("-o", "--output", type=Path, required=True)
    p.add_argument("--threshold", type=_threshold, default=DEFAULT_THRESHOLD)
    p.add_argument("--report", action="store_true", help="print before/after angles and accuracy")

    p = sub.add_parser("synth", help="shear an upright glyph by a known angle")
    p.add_argument("image", type=Path)
    p.add_argument("--angle", type=float, required=True, metavar="DEG")
    p.add_argument("-o", "--output", type=Path, required=True)

    p = sub.add_parser("bench", help="evaluate every image in a directory")
    p.add_argument("corpus", type=Path)
    p.add_argument("--format", choices=("csv", "md"), default="csv")
    p.add_argument("-o", "--output", type=Path)
    p.add_argument("--threshold", type=_threshold, default=DEFAULT_THRESHOLD)
    p.add_argument("--repeats", type=int, default=5)
    return parser


def cmd_detect(args) -> None:
    glyph = binarize(load_image(args.image), args.threshold)
    estimate, cp = estimate_skew(glyph)
    print(f"angle_deg {estimate.angle_deg:.3f}")
    print(f"direction {estimate.direction}")
    print(f"upper_centroid {cp.cgwu:.3f} {cp.cghu:.3f}")
    print(f"lower_centroid {cp.cgwl:.3f} {cp.cghl:.3f}")
    if args.annotate:
        save_image(annotate(glyph, cp, estimate), args.annotate)


def cmd_correct(args) -> None:
    gray = load_image(args.image)
    result = correct(binarize(gray, args.threshold), gray, args.threshold)
    save_image(result.image, args.output)
    if args.report:
        print(f"before_deg {result.before.angle_deg:.3f} {result.before.direction}")
        print(f"after_deg {result.residual.angle_deg:.3f} {result.residual.direction}")
        print(f"accuracy_pct {accuracy(result.before.angle_deg, result.residual.angle_deg):.2f}")


def cmd_synth(args) -> None:
    spec = ShearSpec(args.angle)
    save_image(shear(load_image(args.image), spec), args.output)


def cmd_bench(args) -> None:
    rows, summary = bench.run_corpus(args.corpus, args.threshold, args.repeats)
    text = bench.write_csv(rows) if args.format == "csv" else bench.write_markdown(rows, summary)
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    logging.getLogger(__name__).info(
        "%d glyphs, mean accuracy %.2f%%, mean %.1f ms", summary.count, summary.mean_accuracy_pct, summary.mean_time_ms
    )


COMMANDS = {"detect": cmd_detect, "correct": cmd_correct, "synth": cmd_synth, "bench": cmd_bench}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        COMMANDS[args.command](args)
    except (SlantError, OSError, ValueError) as exc:
        print(f"cogslant: {exc}", file=sys.stderr)
        return EXIT_PROCESSING
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
