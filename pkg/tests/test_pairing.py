import numpy as np
import pytest
from hypothesis import given, strategies as st

import config
from core.errors import CapacityError, NotANaturalError
from core.naturals import ensure_natural
from core.pairing import Pairing, diagonal_of, pair, pi1, pi2, triangular, unpair


def test_first_codes_follow_diagonals():
    assert [pair(0, 0), pair(1, 0), pair(0, 1), pair(2, 0), pair(1, 1), pair(0, 2)] == [0, 1, 2, 3, 4, 5]


def test_known_values():
    assert pair(1, 1) == 4
    assert unpair(2) == (0, 1)
    assert pi1(pair(7, 3)) == 7
    assert pi2(pair(7, 3)) == 3
    assert triangular(4) == 10
    assert diagonal_of(10) == 4
    assert diagonal_of(9) == 3


def test_round_trip_small_grid():
    for x in range(500):
        for y in range(500):
            assert unpair(pair(x, y)) == (x, y)


def test_round_trip_codes():
    for code in range(100_000):
        assert pair(*unpair(code)) == code


@given(st.integers(min_value=0, max_value=2**60))
def test_unpair_inverts_pair_on_large_codes(code):
    x, y = unpair(code)
    assert pair(x, y) == code


@given(st.integers(min_value=0, max_value=2**20), st.integers(min_value=0, max_value=2**20))
def test_pair_is_injective_on_random_pairs(x, y):
    assert Pairing.of_pair(x, y) == Pairing.of_code(pair(x, y))


def test_capacity():
    with pytest.raises(CapacityError):
        pair(2**32, 2**32)
    with pytest.raises(CapacityError):
        ensure_natural(config.MAX_NATURAL + 1)
    assert ensure_natural(config.MAX_NATURAL) == config.MAX_NATURAL


@pytest.mark.parametrize('bad', [-1, 1.5, '3', True, None])
def test_rejects_non_naturals(bad):
    with pytest.raises(NotANaturalError):
        ensure_natural(bad)


def test_numpy_integers_are_accepted():
    value = ensure_natural(np.int64(5))
    assert value == 5 and type(value) is int
