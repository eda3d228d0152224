import csv
import re
from pathlib import Path

import pytest
from hypothesis import settings

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def load_csv(name):
    with open(DATA / name, newline="") as f:
        return list(csv.DictReader(f))


@pytest.fixture(scope="session")
def golden_commas():
    return load_csv("dr_commas_200.csv")


@pytest.fixture(scope="session")
def golden_b():
    return load_csv("dr_b_1400.csv")


@pytest.fixture(scope="session")
def golden_three():
    return load_csv("three_algorithms_97.csv")


@pytest.fixture(scope="session")
def golden_pyth():
    return load_csv("pyth_octave4.csv")


# acceptance criteria report: test_acceptance records one line per criterion
ACCEPTANCE_RESULTS = {}


def _criterion_order(key):
    num, rest = re.match(r"(\d+)(.*)", key).groups()
    return int(num), rest


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_RESULTS, key=_criterion_order):
        ok, title, detail = ACCEPTANCE_RESULTS[key]
        line = f"[{'PASS' if ok else 'FAIL'}] AC{key:<4} {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
