import pytest

from wreathgraphs import Graph, Poset


@pytest.fixture
def yshape_poset():
    return Poset.from_covers(["1", "2", "3", "4"], [("1", "3"), ("2", "3"), ("3", "4")])


@pytest.fixture
def v_poset():
    return Poset.from_covers(["1", "2", "3"], [("1", "3"), ("2", "3")])


@pytest.fixture
def k2():
    return Graph(["u1", "v1"], [("u1", "v1")])


@pytest.fixture
def k2b():
    return Graph(["u2", "v2"], [("u2", "v2")])


@pytest.fixture
def triangle():
    return Graph(["c", "d", "e"], [("c", "d"), ("d", "e"), ("e", "c")])


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(module.RESULTS):
        terminalreporter.write_line(module.RESULTS[n])
