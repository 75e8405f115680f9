import pytest

from zeckblocks.codec import encode


@pytest.fixture(scope="session")
def expansions_100k() -> list[str]:
    """Zeckendorf digit words for every N < 10**5, indexed by N."""
    return [encode(n) for n in range(100_000)]
