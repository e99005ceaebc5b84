from __future__ import annotations

import pytest

from leechcert.codes import kissing_chain

_ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def chain():
    """[Leech code, 4600, 891, 336, 170] with the default base choice."""
    return kissing_chain(4)


@pytest.fixture(scope="session")
def code4600(chain):
    return chain[1]


@pytest.fixture(scope="session")
def code891(chain):
    return chain[2]


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    key = (mark.args[0], mark.args[1])
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        prev = _ACCEPTANCE.get(key, True)
        _ACCEPTANCE[key] = prev and rep.outcome == "passed"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for (num, title), ok in sorted(_ACCEPTANCE.items()):
        tr.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}")
