import random
from math import comb

import pytest

from multiproj import Atom, Factor, SheafSum, Space


def compositions(d):
    """Ordered tuples of positive integers summing to d."""
    if d == 0:
        yield ()
        return
    for first in range(1, d + 1):
        for rest in compositions(d - first):
            yield (first,) + rest


def spaces_up_to(dmax):
    return [Space(c) for d in range(1, dmax + 1) for c in compositions(d)]


# independent cohomology of line bundles on P^n: monomials and Serre duality
def h0_line(n, m):
    return comb(m + n, n) if m >= 0 else 0


def h_line(n, m, q):
    if q == 0:
        return h0_line(n, m)
    if q == n:
        return h0_line(n, -m - n - 1)
    return 0


def h_line_product(dims, degrees):
    """[h^q] of O(a) on a product, by brute-force Kunneth over all compositions."""
    from itertools import product

    out = [0] * (sum(dims) + 1)
    for qs in product(*(range(n + 1) for n in dims)):
        v = 1
        for n, a, q in zip(dims, degrees, qs):
            v *= h_line(n, a, q)
        out[sum(qs)] += v
    return out


def random_atom(rng, dims, lo=-3, hi=3, forms=True):
    return Atom(
        Factor(n, rng.randint(0, n) if forms else 0, rng.randint(lo, hi)) for n in dims
    )


def random_sheaf(rng, X, max_terms=4, lo=-3, hi=3, forms=True):
    k = rng.randint(1, max_terms)
    return SheafSum.of(X, [random_atom(rng, X.dims, lo, hi, forms) for _ in range(k)])


@pytest.fixture
def rng():
    return random.Random(20240611)


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid] = report.outcome


def pytest_collection_modifyitems(items):
    for item in items:
        if "test_acceptance.py" in item.nodeid:
            doc = (item.function.__doc__ or item.name).strip().splitlines()[0]
            _acceptance.setdefault(item.nodeid, None)
            _labels[item.nodeid] = doc


_labels = {}


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in _acceptance.items():
        status = {"passed": "PASS", "failed": "FAIL", None: "NOT RUN"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"{status:8} {_labels.get(nodeid, nodeid)}")
