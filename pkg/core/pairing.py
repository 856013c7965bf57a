"""
Pairing — Cantor pairing <x,y> = (x+y)(x+y+1)/2 + y and its projections.

Codes on one diagonal w = x+y are consecutive: <w-i, i> = T(w) + i with
T(w) = w(w+1)/2, so code order is (diagonal, second coordinate) order.
"""

from dataclasses import dataclass
from math import isqrt

from core.naturals import ensure_natural


@dataclass(frozen=True)
class Pairing:
    """A code together with its two projections."""
    code: int
    left: int
    right: int

    @classmethod
    def of_code(cls, code):
        x, y = unpair(code)
        return cls(code, x, y)

    @classmethod
    def of_pair(cls, x, y):
        return cls(pair(x, y), x, y)


def triangular(w):
    """T(w) = w(w+1)/2, the code of <w,0>."""
    return w * (w + 1) // 2


def pair(x, y):
    """
    Cantor pairing.

    Example:
        pair(1, 1) → 4

    Raises:
        CapacityError: the code exceeds 64 bits
    """
    ensure_natural(x, 'x')
    ensure_natural(y, 'y')
    return ensure_natural(triangular(x + y) + y, 'pair code')


def diagonal_of(code):
    """Largest w with T(w) <= code."""
    return (isqrt(8 * code + 1) - 1) // 2


def unpair(code):
    """
    Inverse of pair.

    Example:
        unpair(2) → (0, 1)
    """
    ensure_natural(code, 'code')
    w = diagonal_of(code)
    y = code - triangular(w)
    return w - y, y


def pi1(code):
    """First projection."""
    return unpair(code)[0]


def pi2(code):
    """Second projection."""
    return unpair(code)[1]
