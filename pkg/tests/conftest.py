import pytest

from whitney.corpus import load_corpus, load_extra, load_map_suite


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, outside pytest's capture."""
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
from whitney.simplicial import barycentric_subdivision


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def map_suite():
    return load_map_suite()


@pytest.fixture(scope="session")
def subdivisions(corpus):
    return {name: barycentric_subdivision(e.complex) for name, e in corpus.items()}


@pytest.fixture(scope="session")
def rp2(corpus):
    return corpus["rp2_6"].complex


@pytest.fixture(scope="session")
def circle():
    return load_extra("s1_3")


@pytest.fixture(scope="session")
def sphere():
    return load_extra("boundary_delta3")
