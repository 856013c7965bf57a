"""
Computable Domains — decidable infinite sets of pairing codes.

  pyramid      {<x,y> : y <= x}                    column x has x+1 members
  calibrated   {<x,i> : x ∈ S or i = 0}            infinite if x ∈ S, else 1
  bounded      {<x,0>} ∪ {<x,1> : x ∈ S}           2 if x ∈ S, else 1
  full         every code                          infinite

Every domain contains <x,0> for all x. Each one answers count / rank / select
on a single Cantor diagonal w = x+i, which is all CanonicalBijection needs.
"""

import math
import threading
from bisect import bisect_left
from enum import Enum

from constructions.bijection import CanonicalBijection
from core.errors import NonComputableSetError
from core.pairing import unpair
from reductions.reduction import ReductionClass


class ColumnProfile(str, Enum):
    EXACTLY_ONE = 'exactly-1'
    EXACTLY_TWO = 'exactly-2'
    INFINITE = 'infinite'
    LINEAR = 'x+1'


_PROFILE_SIZE = {
    ColumnProfile.EXACTLY_ONE: 1,
    ColumnProfile.EXACTLY_TWO: 2,
    ColumnProfile.INFINITE: math.inf,
}


class _MemberIndex:
    """Sorted members of a set below a growing scan limit."""

    def __init__(self, S, block=1024):
        self.S = S
        self._members = []
        self._scanned = 0
        self._block = block
        self._lock = threading.Lock()

    def _cover(self, m):
        if self._scanned >= m:
            return
        with self._lock:
            while self._scanned < m:
                start, stop = self._scanned, self._scanned + self._block
                found = [x for x in range(start, stop) if self.S.rule(x)]
                self._members.extend(found)
                self._scanned = stop

    def count_below(self, m):
        """|S ∩ [0, m)|"""
        self._cover(m)
        return bisect_left(self._members, m)

    def at(self, index):
        return self._members[index]


class ComputableDomain:
    """
    Base class. Subclasses define membership of (x, i) and the per-diagonal
    arithmetic; the canonical bijection is built once per domain.
    """

    def __init__(self, descriptor, calibrator=None):
        self.descriptor = descriptor
        self.calibrator = calibrator
        self.bijection = CanonicalBijection(self)

    def __repr__(self):
        return f"{type(self).__name__}({self.descriptor!r})"

    def __str__(self):
        return self.descriptor

    # membership ---------------------------------------------------------------

    def contains_pair(self, x, i):
        raise NotImplementedError

    def predicate(self, code):
        x, i = unpair(code)
        return self.contains_pair(x, i)

    __contains__ = predicate

    # profile ------------------------------------------------------------------

    def column_profile(self, x):
        raise NotImplementedError

    def column_size(self, x):
        """Number of i with <x,i> in the domain (math.inf for infinite columns)."""
        profile = self.column_profile(x)
        if profile is ColumnProfile.LINEAR:
            return x + 1
        return _PROFILE_SIZE[profile]

    # diagonal arithmetic ------------------------------------------------------

    def diagonal_count(self, w):
        raise NotImplementedError

    def diagonal_rank(self, w, i):
        """Members <w-i', i'> on diagonal w with i' < i."""
        return i

    def diagonal_select(self, w, j):
        """Second coordinate of the j-th member on diagonal w."""
        return j

    # witnesses ----------------------------------------------------------------

    def projection_class(self):
        """Class of q(n) = π₁(σ(n)) as a reduction from the pullback to A."""
        raise NotImplementedError


class PyramidDomain(ComputableDomain):

    def __init__(self):
        super().__init__('pyramid')

    def contains_pair(self, x, i):
        return i <= x

    def column_profile(self, x):
        return ColumnProfile.LINEAR

    def diagonal_count(self, w):
        # i <= w - i
        return w // 2 + 1

    def projection_class(self):
        return ReductionClass.finite_one()


class FullDomain(ComputableDomain):

    def __init__(self):
        super().__init__('full')

    def contains_pair(self, x, i):
        return True

    def column_profile(self, x):
        return ColumnProfile.INFINITE

    def diagonal_count(self, w):
        return w + 1

    def projection_class(self):
        return ReductionClass.many_one()


def _require_computable(S, builder):
    if not S.computable:
        raise NonComputableSetError(
            f"{builder} needs a computable S; {S.descriptor} is a pseudo-random stand-in"
        )


class BoundedCalibratedDomain(ComputableDomain):

    def __init__(self, S):
        _require_computable(S, 'bounded_calibrated_domain')
        super().__init__(f"bounded({S.descriptor})", calibrator=S)

    def contains_pair(self, x, i):
        return i == 0 or (i == 1 and self.calibrator.rule(x))

    def column_profile(self, x):
        return ColumnProfile.EXACTLY_TWO if self.calibrator.rule(x) else ColumnProfile.EXACTLY_ONE

    def diagonal_count(self, w):
        # <w,0> always, <w-1,1> when w-1 ∈ S
        return 1 + (w >= 1 and bool(self.calibrator.rule(w - 1)))

    def projection_class(self):
        return ReductionClass.bounded(2)


class CalibratedDomain(ComputableDomain):
    """
    Members on diagonal w: i = 0, plus every i >= 1 with w-i ∈ S. Those i
    correspond to the S-members below w read from the top down.
    """

    def __init__(self, S):
        _require_computable(S, 'calibrated_domain')
        super().__init__(f"calibrated({S.descriptor})", calibrator=S)
        self._index = _MemberIndex(S)

    def contains_pair(self, x, i):
        return i == 0 or bool(self.calibrator.rule(x))

    def column_profile(self, x):
        return ColumnProfile.INFINITE if self.calibrator.rule(x) else ColumnProfile.EXACTLY_ONE

    def diagonal_count(self, w):
        return 1 + self._index.count_below(w)

    def diagonal_rank(self, w, i):
        if i == 0:
            return 0
        # S-members x with w-i < x <= w-1
        return 1 + self._index.count_below(w) - self._index.count_below(w - i + 1)

    def diagonal_select(self, w, j):
        if j == 0:
            return 0
        x = self._index.at(self._index.count_below(w) - j)
        return w - x

    def projection_class(self):
        return ReductionClass.many_one()


# =============================================================================
# BUILDERS
# =============================================================================

def pyramid_domain():
    return PyramidDomain()


def full_domain():
    return FullDomain()


def calibrated_domain(S):
    """
    D_S. Rejects seeded-random S.

    Raises:
        NonComputableSetError: S has no computable rule
    """
    return CalibratedDomain(S)


def bounded_calibrated_domain(S):
    """E_S. Rejects seeded-random S."""
    return BoundedCalibratedDomain(S)


def sigma(d, n):
    """σ_d(n): the (n+1)-th smallest member code of d."""
    return d.bijection.forward(n)


def sigma_inv(d, code):
    """
    σ_d⁻¹(code).

    Raises:
        NotInDomainError: code ∉ d
    """
    return d.bijection.inverse(code)
