from pathlib import Path

import pytest

from gasimon.blade import BitString
from gasimon.cartan import DenseMatrix
from gasimon.fixtures import load_fixture
from gasimon.multivector import Multivector

FIXTURES = Path(__file__).parent / "fixtures"


def bs(text):
    return BitString.parse(text)


def mv(*terms):
    """``mv((1, "0000"), (-1, "1000"))`` -> multivector."""
    return Multivector(len(terms[0][1]), [(bs(b), c) for c, b in terms])


def load_matrix(name) -> DenseMatrix:
    return DenseMatrix.from_text((FIXTURES / f"{name}.txt").read_text())


@pytest.fixture
def table1():
    return load_fixture("table1")


@pytest.fixture
def table2():
    return load_fixture("table2")


@pytest.fixture
def table4():
    return load_fixture("table4")


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_ac" in nodeid and rep.when == "call":
                name = nodeid.split("::")[-1]
                lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}")
