import time

import pytest

from srgkit.equations import Mode
from srgkit.solve import solve_counts

# wall-clock seconds per expensive fixture, for the timing assertions
BUILD_SECONDS: dict[str, float] = {}


def _timed(name, *args, **kwargs):
    start = time.perf_counter()
    table = solve_counts(*args, **kwargs)
    BUILD_SECONDS[name] = time.perf_counter() - start
    return table


@pytest.fixture(scope="session")
def tf_table():
    """Triangle-free solution table through order 7."""
    return _timed("tf7", 7, Mode.TRIANGLE_FREE)


@pytest.fixture(scope="session")
def tf_table5():
    """Cheap triangle-free table for tests that stop at order 5."""
    return solve_counts(5, Mode.TRIANGLE_FREE)


@pytest.fixture(scope="session")
def general_table():
    return solve_counts(5, Mode.GENERAL)


@pytest.fixture(scope="session")
def moore_table():
    """Moore-graph table through order 10 (the expensive fixture)."""
    return _timed("moore10", 10, Mode.MOORE)
