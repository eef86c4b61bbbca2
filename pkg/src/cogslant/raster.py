"""Raster types, PGM/PNG I/O, binarization and band slicing.

All rasters live in *ink space*: 0.0 is background (white paper) and 1.0 is
full black ink, so foreground pixels carry the mass. PGM samples use the
opposite polarity (0 = black) and are inverted on load and save.

Coordinates: row ``y`` grows downward from 0 at the top, column ``x`` grows
rightward from 0 at the left.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

import numpy as np

from .errors import GlyphTooSmallError, PnmFormatError

MIN_GLYPH_HEIGHT = 8
DEFAULT_THRESHOLD = 0.5

_PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


@dataclass(frozen=True, eq=False)
class Grayscale:
    """Row-major ink-space intensities in [0, 1], shape ``(height, width)``."""

    data: np.ndarray

    def __post_init__(self):
        arr = np.array(self.data, dtype=np.float64, copy=True)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"expected a non-empty 2-D raster, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)) or arr.min() < 0.0 or arr.max() > 1.0:
            raise ValueError("intensities must lie in [0.0, 1.0]")
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)

    @property
    def height(self) -> int:
        return self.data.shape[0]

    @property
    def width(self) -> int:
        return self.data.shape[1]

    @property
    def mass(self) -> float:
        """Total ink."""
        return float(self.data.sum())

    def __eq__(self, other):
        if not isinstance(other, Grayscale):
            return NotImplemented
        return np.array_equal(self.data, other.data)

    __hash__ = None


@dataclass(frozen=True, eq=False)
class BinaryGlyph:
    """Foreground mask, ``True`` where there is ink."""

    mask: np.ndarray

    def __post_init__(self):
        arr = np.array(self.mask, dtype=bool, copy=True)
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"expected a non-empty 2-D mask, got shape {arr.shape}")
        arr.flags.writeable = False
        object.__setattr__(self, "mask", arr)

    @property
    def height(self) -> int:
        return self.mask.shape[0]

    @property
    def width(self) -> int:
        return self.mask.shape[1]

    @property
    def ink_count(self) -> int:
        return int(self.mask.sum())

    def to_grayscale(self) -> Grayscale:
        """Re-embed the mask as a 0/1 intensity raster."""
        return Grayscale(self.mask.astype(np.float64))

    def __eq__(self, other):
        if not isinstance(other, BinaryGlyph):
            return NotImplemented
        return np.array_equal(self.mask, other.mask)

    __hash__ = None


@dataclass(frozen=True)
class Band:
    """Half-open row range ``[row_start, row_end)`` of a parent glyph."""

    row_start: int
    row_end: int
    kind: Literal["upper", "lower"]

    def __post_init__(self):
        if not 0 <= self.row_start < self.row_end:
            raise ValueError(f"invalid band rows [{self.row_start}, {self.row_end})")
        if self.kind not in ("upper", "lower"):
            raise ValueError(f"unknown band kind {self.kind!r}")

    @property
    def rows(self) -> int:
        return self.row_end - self.row_start

    @property
    def midline(self) -> float:
        """Vertical centre of the band in the full-image frame."""
        return self.row_start + self.rows / 2

    def slice(self) -> slice:
        return slice(self.row_start, self.row_end)


# --- PNM -------------------------------------------------------------------

_TOKEN = re.compile(rb"\s*(?:#[^\n\r]*[\n\r]\s*)*")


def _header_tokens(buf: bytes, count: int) -> tuple[list[bytes], int]:
    """Read ``count`` whitespace separated header tokens, skipping comments.

    Returns the tokens and the offset just past the last one.
    """
    tokens = []
    pos = 2
    for _ in range(count):
        pos = _TOKEN.match(buf, pos).end()
        start = pos
        while pos < len(buf) and not buf[pos : pos + 1].isspace() and buf[pos : pos + 1] != b"#":
            pos += 1
        if start == pos:
            raise PnmFormatError("truncated PNM header")
        tokens.append(buf[start:pos])
    return tokens, pos


def _parse_int(tok: bytes, what: str) -> int:
    if not tok.isdigit():
        raise PnmFormatError(f"bad {what} in PNM header: {tok!r}")
    return int(tok)


def load_pnm(buf: bytes) -> Grayscale:
    """Decode a P5 (binary) or P2 (ASCII) graymap.

    Parameters
    ----------
    buf : bytes
        Whole file contents. Header comments (``#``) are accepted.

    Returns
    -------
    Grayscale
        Ink-space raster, ``intensity = (maxval - sample) / maxval``.

    Raises
    ------
    PnmFormatError
        Unknown magic, malformed header, ``maxval > 255``, truncated or
        out-of-range samples.
    """
    buf = bytes(buf)
    magic = buf[:2]
    if magic not in (b"P5", b"P2"):
        raise PnmFormatError(f"unsupported PNM magic {magic!r}")
    (w_tok, h_tok, max_tok), pos = _header_tokens(buf, 3)
    width = _parse_int(w_tok, "width")
    height = _parse_int(h_tok, "height")
    maxval = _parse_int(max_tok, "maxval")
    if width < 1 or height < 1:
        raise PnmFormatError(f"bad dimensions {width}x{height}")
    if not 1 <= maxval <= 255:
        raise PnmFormatError(f"maxval {maxval} not in 1..255")
    n = width * height

    if magic == b"P5":
        # exactly one whitespace byte separates header and raster
        if pos >= len(buf) or not buf[pos : pos + 1].isspace():
            raise PnmFormatError("missing raster separator")
        payload = buf[pos + 1 : pos + 1 + n]
        if len(payload) < n:
            raise PnmFormatError(f"truncated raster: expected {n} bytes, got {len(payload)}")
        samples = np.frombuffer(payload, dtype=np.uint8).astype(np.float64)
    else:
        body = re.sub(rb"#[^\n\r]*", b" ", buf[pos:]).split()
        if len(body) < n:
            raise PnmFormatError(f"truncated raster: expected {n} samples, got {len(body)}")
        try:
            samples = np.array([int(t) for t in body[:n]], dtype=np.float64)
        except ValueError as exc:
            raise PnmFormatError(f"non-numeric sample in P2 raster: {exc}") from None

    if samples.max() > maxval:
        raise PnmFormatError(f"sample exceeds maxval {maxval}")
    return Grayscale(((maxval - samples) / maxval).reshape(height, width))


def save_pnm(img: Grayscale, format: Literal["P5", "P2"] = "P5") -> bytes:
    """Encode ``img`` as a maxval-255 graymap with a canonical header."""
    samples = np.floor(255.0 * (1.0 - img.data) + 0.5).astype(np.uint8)
    header = f"{format}\n{img.width} {img.height}\n255\n".encode("ascii")
    if format == "P5":
        return header + samples.tobytes()
    if format == "P2":
        lines = (" ".join(str(v) for v in row) for row in samples)
        return header + ("\n".join(lines) + "\n").encode("ascii")
    raise ValueError(f"unknown PNM format {format!r}")


# --- file adapters ---------------------------------------------------------


def load_image(path) -> Grayscale:
    """Load a PGM, or a PNG when Pillow is installed."""
    buf = Path(path).read_bytes()
    if buf.startswith(_PNG_MAGIC):
        return _load_png(buf)
    return load_pnm(buf)


def save_image(img: Grayscale, path) -> None:
    """Write ``img`` as PNG if the suffix says so, else as binary PGM."""
    path = Path(path)
    if path.suffix.lower() == ".png":
        _save_png(img, path)
    else:
        path.write_bytes(save_pnm(img, "P5"))


def _load_png(buf: bytes) -> Grayscale:
    try:
        from PIL import Image
    except ImportError:  # pragma: no cover - depends on environment
        raise PnmFormatError("PNG input requires Pillow (pip install cogslant[png])") from None
    import io

    with Image.open(io.BytesIO(buf)) as im:
        gray = np.asarray(im.convert("L"), dtype=np.float64)
    return Grayscale((255.0 - gray) / 255.0)


def _save_png(img: Grayscale, path: Path) -> None:
    try:
        from PIL import Image
    except ImportError:  # pragma: no cover
        raise RuntimeError("PNG output requires Pillow (pip install cogslant[png])") from None
    samples = np.floor(255.0 * (1.0 - img.data) + 0.5).astype(np.uint8)
    Image.fromarray(samples, mode="L").save(path)


# --- preprocessing ---------------------------------------------------------


def binarize(img: Grayscale, threshold: float = DEFAULT_THRESHOLD) -> BinaryGlyph:
    """Foreground wherever ``intensity >= threshold``."""
    if not 0.0 < threshold < 1.0:
        raise ValueError(f"threshold must lie in (0, 1), got {threshold}")
    return BinaryGlyph(img.data >= threshold)


def split_bands(glyph: BinaryGlyph) -> tuple[Band, Band]:
    """Top and bottom quarter of the glyph, each ``floor(height / 4)`` rows."""
    h = glyph.height
    if h < MIN_GLYPH_HEIGHT:
        raise GlyphTooSmallError(f"glyph height {h} < {MIN_GLYPH_HEIGHT}")
    band_h = h // 4
    return Band(0, band_h, "upper"), Band(h - band_h, h, "lower")
