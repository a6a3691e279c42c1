import random

import pytest

from evenflows.higgs import Divisor, DivisorTuple, WeightMap

POINTS = "abcdef"


def random_tuple(rng: random.Random, n: int, npoints: int = 3, maxmult: int = 4, density: float = 0.4):
    pts = POINTS[:npoints]
    middle = []
    for _ in range(n - 1):
        middle.append(Divisor({p: rng.randint(1, maxmult) for p in pts if rng.random() < density}))
    delta0 = Divisor({p: rng.randint(-3, 3) for p in pts if rng.random() < density})
    return DivisorTuple(delta0, tuple(middle))


def random_weight_map(rng: random.Random, n: int, npoints: int = 3, maxcoef: int = 3):
    mu = {}
    for p in POINTS[:npoints]:
        mu[p] = [rng.randint(0, maxcoef) if rng.random() < 0.5 else 0 for _ in range(n - 1)]
        mu[p].append(rng.randint(-maxcoef, maxcoef))
    return WeightMap(n, mu)


# -- acceptance reporting ---------------------------------------------------

def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
    config._criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        number, title = mark.args
        item.config._criteria[number] = (title, report.outcome)


def pytest_terminal_summary(terminalreporter, config):
    results = getattr(config, "_criteria", {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        title, outcome = results[number]
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d} {verdict}: {title}")
