import re

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")
_results: dict[int, tuple[str, str]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = _CRITERION.search(item.nodeid)
        if m:
            doc = (item.function.__doc__ or "").strip().splitlines()
            _results[int(m.group(1))] = ("NOT RUN", doc[0] if doc else item.name)


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    title = _results.get(n, ("", report.nodeid))[1]
    if report.when == "call" or report.outcome != "passed":
        if report.failed:
            _results[n] = ("FAIL", title)
        elif report.when == "call":
            _results[n] = ("PASS", title)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        status, title = _results[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {title}")
