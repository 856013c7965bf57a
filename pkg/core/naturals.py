"""
Naturals — capacity and type checks shared by every rule.
"""

import numpy as np

import config
from core.errors import CapacityError, NotANaturalError


def ensure_natural(value, what='value'):
    """
    Validate a natural number against the 64-bit capacity.

    numpy integers are accepted and converted to int.

    Returns:
        int: the validated value

    Raises:
        NotANaturalError: negative, bool or non-integer input
        CapacityError: value > MAX_NATURAL
    """
    if isinstance(value, np.integer):
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise NotANaturalError(f"{what} must be a natural, got {value!r}")
    if value < 0:
        raise NotANaturalError(f"{what} must be a natural, got {value}")
    if value > config.MAX_NATURAL:
        raise CapacityError(f"{what} = {value} exceeds capacity {config.MAX_NATURAL}")
    return value
