import random

import pytest

from raagtools import graph as graphs
from raagtools.element import Element
from raagtools.oracle import Oracle


@pytest.fixture(scope="session")
def P4():
    return graphs.bundled("Pbar4")


@pytest.fixture(scope="session")
def P5():
    return graphs.bundled("Pbar5")


@pytest.fixture(scope="session")
def P6():
    return graphs.bundled("Pbar6")


@pytest.fixture(scope="session")
def C5():
    return graphs.bundled("C5")


@pytest.fixture(scope="session")
def O4(P4):
    return Oracle(P4)


@pytest.fixture(scope="session")
def O5(P5):
    return Oracle(P5)


@pytest.fixture
def rng():
    return random.Random(20261015)


def el(graph, text):
    return Element.parse(graph, text)


def to_oracle(o, g):
    return o.from_codes(g.word)


# acceptance summary: one line per test marked with criterion(n, title)

_criteria = {}


@pytest.fixture
def report(request):
    """Attach a short detail string to the acceptance summary line."""
    def note(text):
        request.node.user_properties.append(("detail", text))
    return note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    if rep.when == "setup" and rep.passed:
        return
    n, title = mark.args
    detail = "; ".join(v for k, v in item.user_properties if k == "detail")
    _criteria[n] = (title, rep.passed, rep.duration, detail)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok, secs, detail = _criteria[n]
        line = f"criterion {n:2d} {'PASS' if ok else 'FAIL'}  {title} ({secs:.1f}s)"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
