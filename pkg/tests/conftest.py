import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from kronmult.dixon import character_table  # noqa: E402
from kronmult.families import family_group  # noqa: E402

_tables = {}


@pytest.fixture(scope="session")
def table():
    """Cached character table by descriptor."""
    def get(spec):
        if spec not in _tables:
            _tables[spec] = character_table(family_group(spec))
        return _tables[spec]
    return get


# -- acceptance summary -----------------------------------------------------

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            n, title = m.args
            item.user_properties.append(("criterion", n))
            _criteria.setdefault(n, {"title": title, "outcomes": []})


def pytest_runtest_logreport(report):
    props = dict(report.user_properties)
    if "criterion" not in props:
        return
    if report.when == "call" or report.outcome != "passed":
        _criteria[props["criterion"]]["outcomes"].append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_criteria):
        entry = _criteria[n]
        outcomes = [o for _, o in entry["outcomes"]]
        if not outcomes:
            status = "NOT RUN"
        elif any(o == "failed" for o in outcomes):
            status = "FAIL"
        elif all(o == "skipped" for o in outcomes):
            status = "SKIP"
        else:
            status = "PASS"
        line = f"criterion {n:>2}: {status:<7} {entry['title']}"
        failed = [nid.split("::")[-1] for nid, o in entry["outcomes"] if o == "failed"]
        if failed:
            line += f"  [failed: {', '.join(failed)}]"
        tr.write_line(line)
