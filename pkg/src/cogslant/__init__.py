"""Per-glyph slant detection (centre-of-gravity bands) and sub-pixel correction."""

from .bench import ReportRow, accuracy, annotate, run_corpus
from .correct import CorrectedGlyph, RowShiftPlan, build_shift_plan, correct, shift_row, shift_rows
from .detect import (
    BandStats,
    CentroidPair,
    SkewEstimate,
    band_stats,
    estimate_skew,
    lower_centroid,
    upper_centroid,
)
from .errors import (
    EmptyBandError,
    GlyphTooSmallError,
    InvalidCentroidsError,
    InvalidShearError,
    NotDetectableError,
    PnmFormatError,
    SlantError,
    UnknownFixtureError,
)
from .raster import (
    Band,
    BinaryGlyph,
    Grayscale,
    binarize,
    load_image,
    load_pnm,
    save_image,
    save_pnm,
    split_bands,
)
from .shear import ShearSpec, fixture_names, render_fixture, shear

__version__ = "0.1.0"
