"""
Pytest configuration and shared fixtures.
"""

import sys
from pathlib import Path

import pytest

# Add the src directory to the path so tests can import the package
src_dir = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_dir))

from gabidulin.cache import CacheManager  # noqa: E402
from gabidulin.formats import build_field, read_spec  # noqa: E402
from gabidulin.sampling import make_rng  # noqa: E402


def _preset(name):
    return build_field(read_spec(f"preset:{name}"))


@pytest.fixture(scope="session")
def roots8():
    """(tower, θ) for Q[a]/(a^8 + 1) with θ: a -> a^3."""
    return _preset("roots8")


@pytest.fixture(scope="session")
def kummer():
    """(tower, θ) for K = Q[h]/(h^4 + 1), L = K[a]/(a^8 - 3), θ: a -> h*a."""
    return _preset("kummer")


@pytest.fixture(scope="session")
def cyclo5():
    return _preset("cyclotomic-5")


@pytest.fixture(scope="session")
def cyclo7():
    return _preset("cyclotomic-7")


@pytest.fixture
def rng():
    return make_rng(1234)


@pytest.fixture
def fresh_cache():
    """Ensure no default cache instance leaks between tests."""
    CacheManager.get_instance().reset()
    yield
    CacheManager.get_instance().reset()
