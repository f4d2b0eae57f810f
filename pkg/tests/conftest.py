import pytest

CRITERIA = {
    1: "B3 vector square decomposition",
    2: "B3 pair scan finds the single gap line",
    3: "B3 saturation failure",
    4: "lattice-line convexity scans in A2 and A3",
    5: "Klimyk, oracle and LR agree",
    6: "dimension conservation",
    7: "stretch implies non-vanishing",
    8: "support and alpha-string identities",
    9: "branching convexity and Kostka log-concavity",
    10: "PRV components occur",
    11: "CLI golden files and cache identity",
}

_outcomes: dict[int, list[bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    report = (yield).get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        for n in mark.args:
            _outcomes.setdefault(n, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in CRITERIA.items():
        results = _outcomes.get(n)
        if results is None:
            status = "NOT RUN"
        else:
            status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(f"criterion {n:2d} {status:7s} {title}")
