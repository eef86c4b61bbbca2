"""Regenerate the bundled glyph fixtures.

Run from the repository root::

    python scripts/make_fixtures.py

Needs Pillow and matplotlib (for its copy of the DejaVu fonts). The output is
checked into ``src/cogslant/fixtures`` so tests never rasterize fonts.
"""

import string
import sys
from pathlib import Path

import matplotlib
import numpy as np
from PIL import Image, ImageDraw, ImageFont

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from cogslant.raster import Grayscale, save_pnm  # noqa: E402
from cogslant.shear import SHEARED_FIXTURE_DEG, ShearSpec, shear  # noqa: E402

OUT = ROOT / "src" / "cogslant" / "fixtures"
FONT_DIR = Path(matplotlib.get_data_path()) / "fonts" / "ttf"
FACES = {
    "upright": FONT_DIR / "DejaVuSans.ttf",
    "italic": FONT_DIR / "DejaVuSans-Oblique.ttf",
}
SIZE = 72
MARGIN = 2


def crop(ink: np.ndarray, margin: int = MARGIN) -> np.ndarray:
    ys, xs = np.nonzero(ink > 0)
    ink = ink[ys.min() : ys.max() + 1, xs.min() : xs.max() + 1]
    return np.pad(ink, margin)


def render(ch: str, font_path: Path) -> np.ndarray:
    font = ImageFont.truetype(str(font_path), SIZE)
    im = Image.new("L", (3 * SIZE, 3 * SIZE), 0)
    ImageDraw.Draw(im).text((SIZE // 2, SIZE // 2), ch, fill=255, font=font)
    return crop(np.asarray(im, dtype=np.float64) / 255.0)


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.pgm"):
        old.unlink()
    lines = [
        "# name path",
        f"# faces: DejaVu Sans / DejaVu Sans Oblique at {SIZE}px; sheared = upright sheared by {SHEARED_FIXTURE_DEG} deg",
    ]
    for ch in string.ascii_uppercase + string.ascii_lowercase:
        case = "upper" if ch.isupper() else "lower"
        rasters = {kind: render(ch, path) for kind, path in FACES.items()}
        sheared = shear(Grayscale(rasters["upright"]), ShearSpec(SHEARED_FIXTURE_DEG)).data
        rasters["sheared"] = crop(sheared[MARGIN:-MARGIN])
        for kind, arr in rasters.items():
            fname = f"{case}_{ch}_{kind}.pgm"
            (OUT / fname).write_bytes(save_pnm(Grayscale(arr), "P5"))
            lines.append(f"{ch}-{kind} {fname}")
    (OUT / "manifest.txt").write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines) - 2} fixtures to {OUT}")


if __name__ == "__main__":
    main()
