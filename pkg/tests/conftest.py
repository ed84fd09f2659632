import numpy as np
import pytest

from stereosms import RgbImage, dump_ppm


def make_ppm(width=96, height=64, seed=7):
    """Smooth gradient with noise; deterministic for a given seed."""
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:height, 0:width]
    px = np.stack([x * 255 // max(width - 1, 1), y * 255 // max(height - 1, 1),
                   (x + y) % 256], axis=-1)
    px = (px + rng.integers(0, 8, px.shape)) % 256
    return dump_ppm(RgbImage(px.astype(np.uint8)))


@pytest.fixture
def sample_ppm(tmp_path):
    path = tmp_path / "pair.ppm"
    path.write_bytes(make_ppm())
    return path


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for name, value in report.user_properties:
        if name == "criterion":
            _acceptance.append((value, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {label}  ({duration:.2f}s)")


@pytest.fixture
def criterion(request, record_property):
    """Tag a test as an acceptance criterion; reported in the terminal summary."""
    def tag(label):
        record_property("criterion", label)
    return tag
