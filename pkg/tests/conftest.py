from __future__ import annotations

import random

import pytest

from zzlab import basilica, generators
from zzlab.core import RotationGraph


def random_even_graph(seed: int) -> RotationGraph:
    """Seeded connected graph of degree 4 (odd seeds) or 6 (even seeds) on at most 12 vertices."""
    degree = 4 if seed % 2 else 6
    n = random.Random(seed).randint(3, 12)
    if n * degree % 2:
        n += 1
    return generators.random_regular(n, degree, seed)


def named_fixtures() -> dict[str, RotationGraph]:
    out = {
        "k5-example42": generators.complete_graph("complete-example42"),
        "k5-example53": generators.complete_graph("complete-example53"),
        "k5-example57": generators.complete_graph("complete-example57"),
        "k5-good": generators.complete_good(2),
        "k7-good": generators.complete_good(3),
        "k9-good": generators.complete_good(4),
        "cube3": generators.hamming_cube(3),
        "c3": generators.cycle_graph(3, start=0),
        "c4": generators.cycle_graph(4),
        "c5": generators.cycle_graph(5),
        "dc4": generators.double_cycle(4),
        "dc6": generators.double_cycle(6),
        "c4-basilica": generators.load_fixture("c4_basilica.json"),
    }
    for n in (1, 2, 3, 4):
        out[f"basilica{n}"] = basilica.schreier_graph(n)
    return out


def even_fixtures() -> dict[str, RotationGraph]:
    return {k: g for k, g in named_fixtures().items() if g.degree % 2 == 0 and g.degree >= 4}


@pytest.fixture(scope="session")
def fixtures() -> dict[str, RotationGraph]:
    return named_fixtures()


_CRITERIA: dict[int, str] = {}


def pytest_runtest_logreport(report):
    name = report.nodeid.rsplit("::", 1)[-1]
    if not name.startswith("test_criterion_"):
        return
    number = int(name.split("_")[2])
    if report.when == "call" or report.outcome == "failed":
        if report.failed:
            _CRITERIA[number] = "FAIL"
        else:
            _CRITERIA.setdefault(number, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        terminalreporter.write_line(f"criterion {number}: {_CRITERIA[number]}")
