import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"
_RESULTS: dict[int, tuple[str, list[bool], float]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or rep.when != "call" and not (rep.when == "setup" and rep.failed):
        return
    number, title = marker.args
    entry = _RESULTS.setdefault(number, (title, [], 0.0))
    entry[1].append(rep.passed)
    _RESULTS[number] = (title, entry[1], entry[2] + rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        title, outcomes, seconds = _RESULTS[number]
        verdict = "PASS" if all(outcomes) else "FAIL"
        terminalreporter.write_line(
            f"ACCEPTANCE {number}: {verdict}  {title}  ({sum(outcomes)}/{len(outcomes)} tests, {seconds:.1f}s)"
        )


@pytest.fixture
def fixtures_dir():
    return FIXTURES
