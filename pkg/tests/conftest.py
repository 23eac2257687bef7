import itertools
import random

import pytest

from multishare import PrimeModulus

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101]


def brute_primes(limit):
    return [n for n in range(2, limit) if all(n % d for d in range(2, int(n**0.5) + 1))]


def brute_interpolate(points, p):
    """Search every polynomial of degree < len(points) for the one through ``points``."""
    k = len(points)
    hits = []
    for coeffs in itertools.product(range(p), repeat=k):
        if all(sum(c * x**i for i, c in enumerate(coeffs)) % p == y for x, y in points):
            hits.append(list(coeffs))
    assert len(hits) == 1
    return hits[0]


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture(params=[7, 31, 101, 999961])
def field(request):
    return PrimeModulus(request.param)


# -- acceptance reporting ------------------------------------------------------

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test checks")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = _MARKERS.get(report.nodeid)
    if marker is None:
        return
    n, title = marker
    entry = _ACCEPTANCE.setdefault(n, {"title": title, "ok": True, "tests": 0})
    entry["tests"] += 1
    entry["ok"] &= report.outcome == "passed"


_MARKERS = {}


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            _MARKERS[item.nodeid] = m.args


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        e = _ACCEPTANCE[n]
        verdict = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict}  {e['title']} ({e['tests']} checks)")
