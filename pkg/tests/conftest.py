import numpy as np
import pytest

from cogslant import BinaryGlyph, Grayscale, ShearSpec, shear

ACCEPTANCE_KEY = pytest.StashKey[list]()


def glyph(*rows: str) -> BinaryGlyph:
    """Build a mask from strings, ``#`` = ink."""
    return BinaryGlyph(np.array([[c == "#" for c in r] for r in rows]))


def upright_bar(height=100, width=100, col=50, thickness=1) -> Grayscale:
    a = np.zeros((height, width))
    a[:, col : col + thickness] = 1.0
    return Grayscale(a)


def sheared_bar(theta, **kw) -> Grayscale:
    return shear(upright_bar(**kw), ShearSpec(theta))


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, [])

    def record(label, ok, detail=""):
        lines.append(f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
