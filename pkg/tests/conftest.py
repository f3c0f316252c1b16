import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from centlat.catalog import Catalog, build_catalog, catalog_group  # noqa: E402


@pytest.fixture(scope="session")
def default_catalog():
    return build_catalog(Catalog(max_order=64))


@pytest.fixture(scope="session")
def small_catalog():
    return build_catalog(Catalog(max_order=24))


@pytest.fixture
def S3():
    return catalog_group("S3")


@pytest.fixture
def Q8():
    return catalog_group("Q8")


@pytest.fixture
def D4():
    return catalog_group("D4")


@pytest.fixture
def S4():
    return catalog_group("S4")


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the assertion still decides the test outcome."""

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append((number, line))
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
