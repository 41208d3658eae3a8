import pytest

from helpers import example1, sample_dfas

# Lines recorded by the acceptance suite, echoed in the terminal summary.
ACCEPTANCE_LINES = []


@pytest.fixture
def d1():
    return example1()


@pytest.fixture(scope="session")
def test_dfas():
    return sample_dfas()


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
