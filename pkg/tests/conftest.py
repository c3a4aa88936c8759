import re

_criteria = []


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        status = "PASS" if report.passed else "FAIL"
        _criteria.append((int(m.group(1)), status, m.group(2).replace("_", " ")))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num, status, title in sorted(_criteria):
        terminalreporter.write_line(f"{status}  criterion {num:2d}: {title}")
