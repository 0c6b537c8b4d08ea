import os
from pathlib import Path

import pytest

# zero tables regenerate in minutes; cache them inside the repo across runs
_CACHE = Path(__file__).parent / "_cache"
os.environ.setdefault("CHEBYBOUND_CACHE_DIR", str(_CACHE))

from chebybound.sieve import SieveEngine  # noqa: E402
from chebybound.zeros import cached_table  # noqa: E402


@pytest.fixture(scope="session")
def table_1000():
    return cached_table(1000.0)


@pytest.fixture(scope="session")
def table_2600():
    return cached_table(2600.0)


@pytest.fixture(scope="session")
def table_5000():
    return cached_table(5000.0)


@pytest.fixture(scope="session")
def engine_small():
    """Sieve queries up to 2e6; cheap enough to build per session."""
    return SieveEngine(limit=2 * 10 ** 6)


@pytest.fixture(scope="session")
def engine_1e8():
    return SieveEngine(limit=10 ** 8)
