"""Batch evaluation, accuracy reports and annotated overlays."""

from __future__ import annotations

import csv
import io
import logging
import math
import statistics
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .correct import build_shift_plan, correct
from .detect import CentroidPair, SkewEstimate, estimate_skew
from .errors import PnmFormatError, SlantError
from .raster import DEFAULT_THRESHOLD, BinaryGlyph, Grayscale, binarize, load_image

log = logging.getLogger(__name__)

IMAGE_SUFFIXES = (".pgm", ".pnm", ".png")
CSV_COLUMNS = ("name", "before_deg", "after_deg", "accuracy_pct", "time_ms", "note")
ZERO_SKEW_DEG = 0.01
CAPTION_ROWS = 16


def accuracy(before_deg: float, after_deg: float) -> float:
    """Relative reduction of the skew angle, in percent, clamped to [0, 100].

    >>> round(accuracy(14.424, 1.345), 3)
    90.675
    """
    if before_deg < 0 or after_deg < 0:
        raise ValueError("angles must be non-negative")
    if before_deg < ZERO_SKEW_DEG:
        return 100.0 if after_deg < ZERO_SKEW_DEG else 0.0
    return min(100.0, max(0.0, (before_deg - after_deg) / before_deg * 100.0))


@dataclass(frozen=True)
class ReportRow:
    """One line of a benchmark report, stored at report precision.

    Angles carry 3 decimals, accuracy 2 and time whole milliseconds. A row
    for an image that could not be processed has ``None`` in every numeric
    field and the reason in ``note``.
    """

    name: str
    before_deg: float | None
    after_deg: float | None
    accuracy_pct: float | None
    time_ms: int | None
    note: str = ""

    @classmethod
    def measured(cls, name: str, before_deg: float, after_deg: float, time_ms: float) -> "ReportRow":
        return cls(
            name,
            round(before_deg, 3),
            round(after_deg, 3),
            round(accuracy(before_deg, after_deg), 2),
            int(round(time_ms)),
        )

    @classmethod
    def failed(cls, name: str, note: str) -> "ReportRow":
        return cls(name, None, None, None, None, note)

    @property
    def ok(self) -> bool:
        return self.before_deg is not None


@dataclass(frozen=True)
class Summary:
    count: int
    failures: int
    mean_accuracy_pct: float
    mean_time_ms: float


def summarize(rows: Sequence[ReportRow]) -> Summary:
    good = [r for r in rows if r.ok]
    mean_acc = statistics.fmean(r.accuracy_pct for r in good) if good else math.nan
    mean_ms = statistics.fmean(r.time_ms for r in good) if good else math.nan
    return Summary(len(rows), len(rows) - len(good), mean_acc, mean_ms)


def time_pipeline(glyph: BinaryGlyph, gray: Grayscale, threshold: float, repeats: int = 5):
    """Run detect+correct ``repeats`` times; return the result and median ms."""
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = correct(glyph, gray, threshold)
        times.append((time.perf_counter() - t0) * 1e3)
    return result, statistics.median(times)


def evaluate(name: str, gray: Grayscale, threshold: float = DEFAULT_THRESHOLD, repeats: int = 5) -> ReportRow:
    glyph = binarize(gray, threshold)
    try:
        result, ms = time_pipeline(glyph, gray, threshold, repeats)
    except SlantError as exc:
        return ReportRow.failed(name, f"{type(exc).__name__}: {exc}")
    return ReportRow.measured(name, result.before.angle_deg, result.residual.angle_deg, ms)


def corpus_files(corpus_dir) -> list[Path]:
    corpus_dir = Path(corpus_dir)
    if not corpus_dir.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {corpus_dir}")
    return sorted(p for p in corpus_dir.iterdir() if p.is_file() and p.suffix.lower() in IMAGE_SUFFIXES)


def run_corpus(corpus_dir, threshold: float = DEFAULT_THRESHOLD, repeats: int = 5):
    """Evaluate every readable image in ``corpus_dir`` (sorted by file name).

    Unreadable files are skipped with a warning. Images that fail detection
    get a row with a note instead of aborting the batch.

    Returns
    -------
    rows : list of ReportRow
    summary : Summary
    """
    rows = []
    for path in corpus_files(corpus_dir):
        try:
            gray = load_image(path)
        except (PnmFormatError, OSError, ValueError) as exc:
            log.warning("skipping unreadable %s: %s", path.name, exc)
            continue
        rows.append(evaluate(path.stem, gray, threshold, repeats))
    if not rows:
        raise ValueError(f"no readable images in {corpus_dir}")
    return rows, summarize(rows)


# --- report formats --------------------------------------------------------


def _fmt(value, digits):
    if value is None:
        return ""
    return str(value) if digits is None else f"{value:.{digits}f}"


def write_csv(rows: Iterable[ReportRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        writer.writerow(
            [r.name, _fmt(r.before_deg, 3), _fmt(r.after_deg, 3), _fmt(r.accuracy_pct, 2), _fmt(r.time_ms, None), r.note]
        )
    return buf.getvalue()


def read_csv(text: str) -> list[ReportRow]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header[: len(CSV_COLUMNS) - 1]) != CSV_COLUMNS[:-1]:
        raise ValueError(f"unexpected CSV header {header}")

    def num(s, cast=float):
        return None if s == "" else cast(s)

    rows = []
    for rec in reader:
        rec = rec + [""] * (len(CSV_COLUMNS) - len(rec))
        name, before, after, acc, ms, note = rec[: len(CSV_COLUMNS)]
        rows.append(ReportRow(name, num(before), num(after), num(acc), num(ms, int), note))
    return rows


def write_markdown(rows: Sequence[ReportRow], summary: Summary | None = None) -> str:
    summary = summary or summarize(rows)
    lines = [
        "| Glyph | Before (deg) | After (deg) | Accuracy (%) | Time (ms) |",
        "|---|---:|---:|---:|---:|",
    ]
    for r in rows:
        if r.ok:
            lines.append(f"| {r.name} | {r.before_deg:.3f} | {r.after_deg:.3f} | {r.accuracy_pct:.2f} | {r.time_ms} |")
        else:
            lines.append(f"| {r.name} ({r.note}) | - | - | - | - |")
    lines.append("")
    lines.append(
        f"{summary.count} glyphs, {summary.failures} failed; "
        f"mean accuracy {summary.mean_accuracy_pct:.2f}%, mean time {summary.mean_time_ms:.1f} ms"
    )
    return "\n".join(lines) + "\n"


# --- overlay ---------------------------------------------------------------

# 3x5 bitmaps, one string per row
_DIGITS = {
    "0": ("111", "101", "101", "101", "111"),
    "1": ("010", "110", "010", "010", "111"),
    "2": ("111", "001", "111", "100", "111"),
    "3": ("111", "001", "111", "001", "111"),
    "4": ("101", "101", "111", "001", "001"),
    "5": ("111", "100", "111", "001", "111"),
    "6": ("111", "100", "111", "101", "111"),
    "7": ("111", "001", "010", "010", "010"),
    "8": ("111", "101", "111", "101", "111"),
    "9": ("111", "101", "111", "001", "111"),
    ".": ("000", "000", "000", "000", "010"),
    "-": ("000", "000", "111", "000", "000"),
    "L": ("100", "100", "100", "100", "111"),
    "R": ("110", "101", "110", "101", "101"),
    " ": ("000", "000", "000", "000", "000"),
}

GLYPH_INK = 0.4
LINE_INK = 1.0


def _stamp(canvas: np.ndarray, text: str, top: int) -> None:
    width = canvas.shape[1]
    scale = 2 if 8 * len(text) <= width else 1
    x = 1
    for ch in text:
        bitmap = np.array([[c == "1" for c in row] for row in _DIGITS[ch]])
        block = np.kron(bitmap, np.ones((scale, scale), dtype=bool))
        h, w = block.shape
        if x + w > width:
            break
        canvas[top : top + h, x : x + w][block] = LINE_INK
        x += w + scale


def caption(estimate: SkewEstimate) -> str:
    suffix = {"left": " L", "right": " R", "none": ""}[estimate.direction]
    return f"{estimate.angle_deg:.3f}{suffix}"


def annotate(glyph: BinaryGlyph, centroids: CentroidPair, estimate: SkewEstimate) -> Grayscale:
    """Draw the extended centroid line and the vertical through the lower centroid.

    Glyph ink is rendered at 0.4 and the lines at full ink; a 16-row caption
    strip below the glyph shows the angle and direction.
    """
    h, w = glyph.height, glyph.width
    canvas = np.zeros((h + CAPTION_ROWS, w))
    canvas[:h][glyph.mask] = GLYPH_INK
    plan = build_shift_plan(centroids, h)
    rows = np.arange(h)
    for xs in (np.full(h, centroids.cgwl), plan.line_x(rows)):
        cols = np.floor(xs + 0.5).astype(int)
        inside = (cols >= 0) & (cols < w)
        canvas[rows[inside], cols[inside]] = LINE_INK
    _stamp(canvas, caption(estimate), h + 3)
    return Grayscale(canvas)


def annotate_image(gray: Grayscale, threshold: float = DEFAULT_THRESHOLD) -> Grayscale:
    glyph = binarize(gray, threshold)
    estimate, cp = estimate_skew(glyph)
    return annotate(glyph, cp, estimate)
