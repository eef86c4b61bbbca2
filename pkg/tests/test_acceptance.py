"""Exit criteria. Each test records one PASS/FAIL line, printed in the
terminal summary under "acceptance criteria"."""

import string
import time

import numpy as np

from cogslant import (
    Band,
    BinaryGlyph,
    EmptyBandError,
    GlyphTooSmallError,
    Grayscale,
    NotDetectableError,
    band_stats,
    binarize,
    correct,
    estimate_skew,
    fixture_names,
    render_fixture,
    shift_row,
)
from cogslant.bench import accuracy, evaluate

from conftest import sheared_bar

FLIP = {"left": "right", "right": "left", "none": "none"}


def test_c1_thin_bar_oracle_round_trip(criterion):
    t0 = time.perf_counter()
    results = {}
    for theta in (5.0, 10.0, 15.0, 20.0):
        gray = sheared_bar(theta, height=100, width=100, col=50)
        glyph = binarize(gray)
        est, _ = estimate_skew(glyph)
        fixed = correct(glyph, gray)
        results[theta] = (est.angle_deg, fixed.residual.angle_deg)
    elapsed = time.perf_counter() - t0
    detect_ok = all(abs(d - t) <= 1.0 for t, (d, _) in results.items())
    residual_ok = all(r <= 0.5 for _, r in results.values())
    detail = ", ".join(f"{t:g}deg->{d:.3f}/{r:.3f}" for t, (d, r) in results.items()) + f"; {elapsed * 1e3:.1f} ms"
    ok = criterion("C1 thin-bar oracle (detect +-1.0, residual <= 0.5, < 1 s)", detect_ok and residual_ok and elapsed < 1.0, detail)
    assert ok, detail


def test_c2_accuracy_formula(criterion):
    checks = [
        ("J", accuracy(10.112, 1.245), 87.69, 0.01),
        ("L", accuracy(14.543, 0.901), 93.80, 0.01),
        ("P", accuracy(14.424, 1.345), 90.675, 0.005),
    ]
    ok = all(abs(got - want) <= tol for _, got, want, tol in checks)
    detail = ", ".join(f"{n}={got:.4f}" for n, got, _, _ in checks)
    assert criterion("C2 accuracy formula (reference rows J, L, P)", ok, detail), detail


def test_c3_italic_fixture_plausibility(criterion):
    rows = [evaluate(c, render_fixture(f"{c}-italic"), repeats=1) for c in string.ascii_uppercase]
    failed = [r.name for r in rows if not r.ok]
    out_of_range = [f"{r.name}={r.before_deg}" for r in rows if r.ok and not 8.0 <= r.before_deg <= 22.0]
    good = [r.name for r in rows if r.ok and r.accuracy_pct >= 90.0]
    ok = not failed and not out_of_range and len(good) >= 22
    detail = f"{len(good)}/26 letters >= 90% ({''.join(good)}); before outside [8, 22]: {out_of_range or 'none'}"
    if failed:
        detail += f"; not detectable: {failed}"
    assert criterion("C3 italic fixtures A-Z (before in [8,22], >= 22 letters >= 90%)", ok, detail), detail


def test_c4_shift_row_mass_conservation(criterion):
    rng = np.random.default_rng(20260101)
    worst = 0.0
    for _ in range(1000):
        row = rng.random(rng.integers(1, 64))
        shift = rng.uniform(-5.0, 5.0)
        # five background columns of headroom on each side
        framed = np.concatenate([np.zeros(5), row])
        out = shift_row(framed, shift, framed.size + 5)
        worst = max(worst, abs(out.sum() - row.sum()))
    ok = worst <= 1e-6
    assert criterion("C4 shift_row mass conservation (1000 rows, 1e-6)", ok, f"max error {worst:.2e}"), worst


def test_c5_mirror_antisymmetry(criterion):
    broken = []
    names = fixture_names()
    for name in names:
        glyph = binarize(render_fixture(name))
        est, _ = estimate_skew(glyph)
        mirrored, _ = estimate_skew(BinaryGlyph(glyph.mask[:, ::-1]))
        if mirrored.angle_deg != est.angle_deg or mirrored.direction != FLIP[est.direction]:
            broken.append(name)
    ok = not broken
    detail = f"{len(names) - len(broken)}/{len(names)} fixtures symmetric"
    if broken:
        detail += f"; e.g. {', '.join(broken[:6])}"
    assert criterion("C5 mirror antisymmetry on every fixture", ok, detail), detail


def test_c6_degenerate_inputs(criterion):
    outcomes = {}

    def expect(label, exc, fn):
        try:
            fn()
        except exc:
            outcomes[label] = True
        except Exception as other:  # wrong error type
            outcomes[label] = f"raised {type(other).__name__}"
        else:
            outcomes[label] = "returned silently"

    blank = Grayscale(np.zeros((40, 30)))
    short = Grayscale(np.ones((7, 30)))
    half = np.zeros((40, 30))
    half[20:, 10:14] = 1.0
    top_missing = Grayscale(half)

    expect("blank/detect", NotDetectableError, lambda: estimate_skew(binarize(blank)))
    expect("blank/correct", NotDetectableError, lambda: correct(binarize(blank), blank))
    expect("height7/detect", GlyphTooSmallError, lambda: estimate_skew(binarize(short)))
    expect("height7/correct", GlyphTooSmallError, lambda: correct(binarize(short), short))
    expect("empty-band/stats", EmptyBandError, lambda: band_stats(binarize(top_missing), Band(0, 10, "upper")))
    expect("empty-band/detect", NotDetectableError, lambda: estimate_skew(binarize(top_missing)))
    bad = {k: v for k, v in outcomes.items() if v is not True}
    detail = "all designated errors raised" if not bad else str(bad)
    assert criterion("C6 degenerate inputs raise designated errors", not bad, detail), detail


def test_c7_throughput(criterion):
    yy, xx = np.mgrid[0:100, 0:100]
    # 12-pixel stroke leaning 14 degrees, on a 100x100 canvas
    centre = 40 + (99 - yy) * np.tan(np.radians(14.0))
    gray = Grayscale(np.clip(6.5 - np.abs(xx - centre), 0.0, 1.0))
    glyph = binarize(gray)
    times = []
    for _ in range(20):
        t0 = time.perf_counter()
        estimate_skew(glyph)
        correct(glyph, gray)
        times.append((time.perf_counter() - t0) * 1e3)
    worst = max(times)
    detail = f"median {np.median(times):.2f} ms, worst {worst:.2f} ms"
    assert criterion("C7 detect+correct on 100x100 < 50 ms", worst < 50.0, detail), detail
