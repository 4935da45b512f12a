import re

_criteria = {}


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    # a failure in any phase sticks; otherwise the call phase decides
    if report.failed or (report.when == "call" and key not in _criteria):
        _criteria[key] = "FAIL" if report.failed else ("SKIP" if report.skipped else "PASS")
    elif report.skipped:
        _criteria[key] = "SKIP"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (num, name), status in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {num:2d} {status}  {name.replace('_', ' ')}")
