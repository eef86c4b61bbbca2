"""
Detecting and removing the slant of one glyph
=============================================

Load a bundled italic capital, find the two band centroids, and shift its
rows so the centroid line becomes vertical. Overlays are written next to
this script as PGM files.
"""

from pathlib import Path

from cogslant import binarize, correct, estimate_skew, render_fixture, save_image
from cogslant.bench import accuracy, annotate

out_dir = Path(__file__).with_name("output")
out_dir.mkdir(exist_ok=True)

# Fixtures are stored in ink space: 1.0 is black ink, 0.0 is paper.
gray = render_fixture("A-italic")
glyph = binarize(gray, threshold=0.5)
print(f"glyph is {glyph.width}x{glyph.height}, {glyph.ink_count} ink pixels")

# Upper and lower quarter each contribute one point; the angle of the line
# through them, measured from the vertical, is the slant.
estimate, centroids = estimate_skew(glyph)
print(f"upper centroid ({centroids.cgwu}, {centroids.cghu})")
print(f"lower centroid ({centroids.cgwl}, {centroids.cghl})")
print(f"slant {estimate.angle_deg:.3f} deg, leaning {estimate.direction}")

save_image(annotate(glyph, centroids, estimate), out_dir / "A-italic-detect.pgm")

# Every row is moved back onto the vertical through the lower centroid.
result = correct(glyph, gray)
print(f"widest row shift {result.plan.max_offset:.2f} px, canvas grew by {2 * result.pad} columns")
print(f"residual {result.residual.angle_deg:.3f} deg")
print(f"accuracy {accuracy(result.before.angle_deg, result.residual.angle_deg):.2f}%")

save_image(result.image, out_dir / "A-italic-corrected.pgm")
after, after_centroids = estimate_skew(binarize(result.image))
save_image(annotate(binarize(result.image), after_centroids, after), out_dir / "A-italic-corrected-detect.pgm")
