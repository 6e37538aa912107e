import os

import pytest

from biquandles.catalog import build_named_catalog
from biquandles.enumeration import enumerate_full

EXTENDED = os.environ.get("BIQUANDLES_EXTENDED", "") in ("1", "true", "yes")

# lines recorded by test_acceptance, echoed in the terminal summary
ACCEPTANCE_LINES: list = []


@pytest.fixture(scope="session")
def builds():
    return {n: enumerate_full(n) for n in (2, 3, 4)}


@pytest.fixture(scope="session")
def catalogs(builds):
    return {n: build_named_catalog(b) for n, b in builds.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
