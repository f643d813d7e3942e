import pytest

from polymer_heaps import enumerate_animals, enumerate_heaps


@pytest.fixture(scope="session")
def connected_heaps_small():
    """Connected heaps of total length 1..6, keyed by length."""
    return {n: enumerate_heaps(n, "connected") for n in range(1, 7)}


@pytest.fixture(scope="session")
def all_heaps_small():
    return {n: enumerate_heaps(n, "all") for n in range(1, 7)}


@pytest.fixture(scope="session")
def animals_small():
    return {n: enumerate_animals(n, "all") for n in range(1, 7)}
