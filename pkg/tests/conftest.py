import itertools

import pytest

from nearbip import _backend
from nearbip.graph import Graph


@pytest.fixture
def both_backends(request):
    """Yields 'compiled' and 'pure'; forces the pure kernels for the latter
    and restores the default afterwards."""
    yield
    _backend.force_pure(False)


def pytest_generate_tests(metafunc):
    if "backend" in metafunc.fixturenames:
        modes = ["pure"]
        if _backend.compiled_available():
            modes.insert(0, "compiled")
        metafunc.parametrize("backend", modes)


@pytest.fixture
def backend_mode(backend):
    _backend.force_pure(backend == "pure")
    yield backend
    _backend.force_pure(False)


def all_labelled_graphs(n):
    """Every labelled graph on n vertices (masks built per edge subset)."""
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        masks = [0] * n
        for i, (u, v) in enumerate(pairs):
            if code >> i & 1:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        yield Graph(n, masks)
