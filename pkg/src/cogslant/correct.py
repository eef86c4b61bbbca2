"""Slant removal by per-row sub-pixel shifting.

The line through the two band centroids is extended over the full height of
the glyph. For each row, the horizontal distance between that line and the
vertical through the lower centroid is the row's offset, and the row is moved
by the opposite amount. A glyph leaning right is therefore shifted left above
the lower centroid (and right below it), and vice versa.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .detect import CentroidPair, SkewEstimate, estimate_skew
from .errors import InvalidCentroidsError
from .raster import DEFAULT_THRESHOLD, BinaryGlyph, Grayscale, binarize


@dataclass(frozen=True, eq=False)
class RowShiftPlan:
    """Per-row offsets ``d(y) = (y - cghl) / m`` of the centroid line.

    ``anchor_x`` is the column of the vertical reference (``cgwl``) and
    ``slope_m`` is dy/dx of the centroid line, ``inf`` for a vertical line.
    """

    offsets: np.ndarray
    anchor_x: float
    anchor_y: float
    slope_m: float

    @property
    def max_offset(self) -> float:
        return float(np.abs(self.offsets).max()) if self.offsets.size else 0.0

    def line_x(self, y):
        """Column of the extended centroid line at row(s) ``y``."""
        if math.isinf(self.slope_m):
            return np.full_like(np.asarray(y, dtype=np.float64), self.anchor_x)
        return self.anchor_x + (np.asarray(y, dtype=np.float64) - self.anchor_y) / self.slope_m


@dataclass(frozen=True, eq=False)
class CorrectedGlyph:
    """Corrected raster plus the skew measured before and after."""

    image: Grayscale
    residual: SkewEstimate
    before: SkewEstimate
    centroids: CentroidPair
    plan: RowShiftPlan
    pad: int


def build_shift_plan(centroids: CentroidPair, height: int) -> RowShiftPlan:
    cp = centroids
    if not cp.cghu < cp.cghl:
        raise InvalidCentroidsError(f"upper centroid row {cp.cghu} is not above lower row {cp.cghl}")
    if cp.cgwu == cp.cgwl:
        return RowShiftPlan(np.zeros(height), cp.cgwl, cp.cghl, math.inf)
    m = (cp.cghu - cp.cghl) / (cp.cgwu - cp.cgwl)
    y = np.arange(height, dtype=np.float64)
    offsets = (y - cp.cghl) / m
    offsets.flags.writeable = False
    return RowShiftPlan(offsets, cp.cgwl, cp.cghl, m)


def shift_rows(rows: np.ndarray, shifts: np.ndarray, out_width: int) -> np.ndarray:
    """Translate each row of ``rows`` right by its entry in ``shifts``.

    Inverse-mapped linear interpolation: output column ``x`` samples the
    source at ``x - shift``; samples outside the source are background.
    """
    rows = np.asarray(rows, dtype=np.float64)
    h, w = rows.shape
    shifts = np.asarray(shifts, dtype=np.float64).reshape(h, 1)
    p = np.arange(out_width, dtype=np.float64)[None, :] - shifts
    i0 = np.floor(p)
    f = p - i0
    i0 = i0.astype(np.intp)
    # column 0 and w + 1 of the padded copy are background
    padded = np.zeros((h, w + 2), dtype=np.float64)
    padded[:, 1:-1] = rows
    left = np.take_along_axis(padded, np.clip(i0, -1, w) + 1, axis=1)
    right = np.take_along_axis(padded, np.clip(i0 + 1, -1, w) + 1, axis=1)
    return np.clip((1.0 - f) * left + f * right, 0.0, 1.0)


def shift_row(row, shift: float, out_width: int | None = None) -> np.ndarray:
    """Shift a single row right by ``shift`` columns (negative: left).

    The output frame starts at the same column as the input, so ink pushed
    left of column 0 or right of ``out_width`` is lost. ``out_width`` defaults
    to the input length.
    """
    row = np.asarray(row, dtype=np.float64)
    if row.ndim != 1:
        raise ValueError("shift_row expects a 1-D sequence")
    if out_width is None:
        out_width = row.size
    return shift_rows(row[None, :], np.array([shift]), out_width)[0]


def correct(glyph: BinaryGlyph, gray: Grayscale, threshold: float = DEFAULT_THRESHOLD) -> CorrectedGlyph:
    """Detect the slant of ``glyph`` and shift the rows of ``gray`` to remove it.

    ``gray`` must be the raster ``glyph`` was binarized from. The canvas grows
    by ``ceil(max |d|)`` columns on each side. The residual skew is measured
    on the output re-binarized at ``threshold``.
    """
    if (gray.height, gray.width) != (glyph.height, glyph.width):
        raise ValueError("glyph and grayscale source differ in size")
    before, cp = estimate_skew(glyph)
    plan = build_shift_plan(cp, glyph.height)
    pad = int(math.ceil(plan.max_offset - 1e-9))
    out = Grayscale(shift_rows(gray.data, pad - plan.offsets, gray.width + 2 * pad))
    residual, _ = estimate_skew(binarize(out, threshold))
    return CorrectedGlyph(out, residual, before, cp, plan, pad)
