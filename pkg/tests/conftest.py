"""Shared fixtures: a small corpus of sets and domains."""

import pytest

from constructions.domains import (
    bounded_calibrated_domain, calibrated_domain, full_domain, pyramid_domain,
)
from core.builtin_sets import evens, odds, primes
from core.omega_set import seeded_random_set


@pytest.fixture
def evens_set():
    return evens()


@pytest.fixture
def odds_set():
    return odds()


@pytest.fixture
def random_42():
    return seeded_random_set(42)


@pytest.fixture
def corpus():
    """Sets the window checks are run against."""
    return [seeded_random_set(s) for s in range(1, 6)] + [evens(), primes()]


@pytest.fixture
def evens_domains():
    """All four domain kinds, calibrated over the evens where applicable."""
    E = evens()
    return [pyramid_domain(), full_domain(), calibrated_domain(E), bounded_calibrated_domain(E)]
