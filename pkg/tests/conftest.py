import pytest

from tuttepoly.catalog import complete_graph, connected_catalog, k4_minus_e


@pytest.fixture(scope="session")
def catalog():
    return connected_catalog(5, 7)


@pytest.fixture
def k4e():
    return k4_minus_e()


@pytest.fixture
def triangle():
    return complete_graph(3)


@pytest.fixture
def k4():
    return complete_graph(4)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
