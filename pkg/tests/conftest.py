import pytest

CRITERIA: dict[int, str] = {}
_outcomes: dict[int, list[tuple[str, bool]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            number, title = m.args
            CRITERIA[number] = title
            _outcomes.setdefault(number, [])


def pytest_runtest_logreport(report):
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number = _criterion_of(report)
        if number is not None:
            _outcomes[number].append((report.nodeid.split("::")[-1], report.outcome == "passed"))


def _criterion_of(report):
    for key, value in report.user_properties:
        if key == "criterion":
            return value
    return None


@pytest.fixture(autouse=True)
def _tag_criterion(request, record_property):
    m = request.node.get_closest_marker("criterion")
    if m is not None:
        record_property("criterion", m.args[0])


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_outcomes):
        runs = _outcomes[number]
        if not runs:
            continue
        ok = all(passed for _, passed in runs)
        tr.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {CRITERIA[number]}")
        if not ok:
            for name, passed in runs:
                if not passed:
                    tr.write_line(f"     failing: {name}")
