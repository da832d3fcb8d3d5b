import numpy as np
import pytest

_criteria = {}


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    for marker in report.keywords:
        if marker.startswith("criterion_"):
            key = int(marker.split("_")[1])
            ok = _criteria.get(key, True) and report.passed
            _criteria[key] = ok


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_criteria):
        status = "PASS" if _criteria[key] else "FAIL"
        terminalreporter.write_line(f"criterion {key}: {status}")


def pytest_configure(config):
    for k in range(1, 10):
        config.addinivalue_line("markers", f"criterion_{k}: acceptance criterion {k}")
