"""Synthetic italic slant with known ground truth, and the bundled fixtures.

``shear`` displaces every row horizontally in proportion to its distance above
an anchor row. It is the reference against which detection and correction are
judged, and it uses the same linear interpolation kernel as the corrector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

import numpy as np

from .correct import shift_rows
from .errors import InvalidShearError, UnknownFixtureError
from .raster import Grayscale, load_pnm

# angle used for the "<c>-sheared" fixture set
SHEARED_FIXTURE_DEG = 12.0


@dataclass(frozen=True)
class ShearSpec:
    """Shear by ``theta_deg`` (positive: top leans right) about ``anchor_row``.

    ``anchor_row=None`` means the bottom row of whatever image it is applied to.
    """

    theta_deg: float
    anchor_row: int | None = None

    def __post_init__(self):
        if not abs(self.theta_deg) < 45.0:
            raise InvalidShearError(f"|theta| must be < 45 degrees, got {self.theta_deg}")

    def anchor_for(self, height: int) -> int:
        anchor = height - 1 if self.anchor_row is None else self.anchor_row
        if not 0 <= anchor < height:
            raise ValueError(f"anchor row {anchor} outside image of height {height}")
        return anchor


def shear_displacements(height: int, spec: ShearSpec) -> np.ndarray:
    """Rightward displacement of every row, ``(anchor - y) * tan(theta)``."""
    anchor = spec.anchor_for(height)
    y = np.arange(height, dtype=np.float64)
    return (anchor - y) * math.tan(math.radians(spec.theta_deg))


def shear_padding(height: int, spec: ShearSpec) -> tuple[int, int]:
    """Columns added on the left and right so that no ink is clipped."""
    d = shear_displacements(height, spec)
    return int(math.ceil(max(0.0, -d.min()) - 1e-9)), int(math.ceil(max(0.0, d.max()) - 1e-9))


def shear(img: Grayscale, spec: ShearSpec) -> Grayscale:
    """Apply a horizontal shear, widening the canvas as needed.

    The source column for output ``(x, y)`` is ``x - (anchor - y) * tan(theta)``
    in the original frame; the anchor row itself is copied unchanged. Left
    padding (only needed when some rows move left) shifts the frame by a whole
    number of columns.
    """
    d = shear_displacements(img.height, spec)
    pad_l, pad_r = shear_padding(img.height, spec)
    out = shift_rows(img.data, d + pad_l, img.width + pad_l + pad_r)
    return Grayscale(out)


# --- fixtures --------------------------------------------------------------


@lru_cache(maxsize=1)
def fixture_manifest() -> dict[str, str]:
    """Map of fixture name to its file inside the ``fixtures`` package."""
    text = resources.files("cogslant.fixtures").joinpath("manifest.txt").read_text()
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, path = line.split(maxsplit=1)
        out[name] = path
    return out


def fixture_names(kind: str | None = None) -> list[str]:
    """Names in manifest order, optionally filtered by suffix (``"italic"``...)."""
    names = list(fixture_manifest())
    if kind is not None:
        names = [n for n in names if n.endswith("-" + kind)]
    return names


def render_fixture(name: str) -> Grayscale:
    """Load a bundled, pre-rendered glyph such as ``"A-italic"``."""
    try:
        rel = fixture_manifest()[name]
    except KeyError:
        raise UnknownFixtureError(name) from None
    return load_pnm(resources.files("cogslant.fixtures").joinpath(rel).read_bytes())
