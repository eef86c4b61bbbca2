"""Centre-of-gravity slant detection on a single binary glyph.

The glyph is cut into its top and bottom quarter. Each band is summarised by
the horizontal extent of its ink and by how much ink falls left and right of
the image's vertical midline. Those numbers give one representative point per
band, and the slant is the inclination of the line joining the two points,
measured from the vertical.

The band "centroids" are not first moments. The upper one leans towards the
left end of the ink extent when the band is left-heavy::

    left  > right   cgwu = minwu + (maxwu - minwu) / 4
    left  < right   cgwu = minwu + (maxwu - minwu) / 2
    left == right   cgwu = minwu + (maxwu - minwu) / 2

and the lower one is always the midpoint of its extent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import EmptyBandError, NotDetectableError
from .raster import Band, BinaryGlyph, split_bands

Direction = Literal["left", "right", "none"]


@dataclass(frozen=True)
class BandStats:
    """Ink extrema and left/right zone counts of one band.

    ``min_x``/``max_x`` hold minwu/maxwu for the upper band and minwl/maxwl
    for the lower band. The zone boundary is column ``floor(width / 2)``,
    which itself belongs to the right zone.
    """

    min_x: int
    max_x: int
    left_count: int
    right_count: int


@dataclass(frozen=True)
class CentroidPair:
    """Upper ``(cgwu, cghu)`` and lower ``(cgwl, cghl)`` points, full-image frame."""

    cgwu: float
    cghu: float
    cgwl: float
    cghl: float

    @property
    def upper(self) -> tuple[float, float]:
        return self.cgwu, self.cghu

    @property
    def lower(self) -> tuple[float, float]:
        return self.cgwl, self.cghl


@dataclass(frozen=True)
class SkewEstimate:
    angle_deg: float
    direction: Direction

    @property
    def signed_deg(self) -> float:
        """Positive when the top leans right."""
        return -self.angle_deg if self.direction == "left" else self.angle_deg


def band_stats(glyph: BinaryGlyph, band: Band) -> BandStats:
    if band.row_end > glyph.height:
        raise ValueError(f"band rows [{band.row_start}, {band.row_end}) exceed glyph height {glyph.height}")
    rows = glyph.mask[band.slice()]
    cols = np.flatnonzero(rows.any(axis=0))
    if cols.size == 0:
        raise EmptyBandError(f"{band.kind} band [{band.row_start}, {band.row_end}) has no foreground")
    per_col = rows.sum(axis=0)
    mid = glyph.width // 2
    return BandStats(
        min_x=int(cols[0]),
        max_x=int(cols[-1]),
        left_count=int(per_col[:mid].sum()),
        right_count=int(per_col[mid:].sum()),
    )


def upper_centroid(stats: BandStats, band: Band) -> tuple[float, float]:
    """Return ``(cgwu, cghu)`` for the upper band."""
    extent = stats.max_x - stats.min_x
    if stats.left_count > stats.right_count:
        cgwu = stats.min_x + extent / 4
    elif stats.left_count < stats.right_count:
        cgwu = stats.min_x + extent / 2
    else:
        # tie: same expression as the right-heavy case
        cgwu = stats.min_x + extent / 2
    return cgwu, band.midline


def lower_centroid(stats: BandStats, band: Band) -> tuple[float, float]:
    """Return ``(cgwl, cghl)`` for the lower band."""
    return stats.min_x + (stats.max_x - stats.min_x) / 2, band.midline


def centroids(glyph: BinaryGlyph) -> CentroidPair:
    upper, lower = split_bands(glyph)
    try:
        cgwu, cghu = upper_centroid(band_stats(glyph, upper), upper)
        cgwl, cghl = lower_centroid(band_stats(glyph, lower), lower)
    except EmptyBandError as exc:
        raise NotDetectableError(str(exc)) from exc
    return CentroidPair(cgwu, cghu, cgwl, cghl)


def skew_from_centroids(cp: CentroidPair) -> SkewEstimate:
    """Angle of the centroid line from the vertical.

    The horizontal displacement of the two points is the perpendicular and
    their vertical separation is the base of the right triangle.
    """
    perpendicular = abs(cp.cgwu - cp.cgwl)
    base = cp.cghl - cp.cghu
    angle = 180.0 * math.atan(perpendicular / base) / math.pi
    if cp.cgwu > cp.cgwl:
        direction = "right"
    elif cp.cgwu < cp.cgwl:
        direction = "left"
    else:
        direction = "none"
    return SkewEstimate(angle, direction)


def estimate_skew(glyph: BinaryGlyph) -> tuple[SkewEstimate, CentroidPair]:
    """Detect the slant of ``glyph``.

    Raises
    ------
    GlyphTooSmallError
        Height below 8 rows.
    NotDetectableError
        Either band is blank (this includes an entirely blank image).
    """
    cp = centroids(glyph)
    return skew_from_centroids(cp), cp
