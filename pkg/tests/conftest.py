import pytest

_acceptance = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker and rep.when == "call":
        _acceptance.append((marker.args[0], marker.args[1], rep.outcome, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, text, result, duration in sorted(_acceptance):
        status = "PASS" if result == "passed" else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {number:>2}: {text}  ({duration:.1f}s)")
