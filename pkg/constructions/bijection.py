"""
Canonical Bijection — rank/select of a decidable infinite domain of codes.

σ(n) is the (n+1)-th smallest member code, σ⁻¹(c) the number of member codes
below c. Codes on one Cantor diagonal are consecutive, so the table only
stores cumulative member counts per diagonal:

    cum[w] = number of members on diagonals < w

and each domain answers count/rank/select inside a single diagonal. The
table grows in blocks of RANK_BLOCK_DIAGONALS under a writer lock; a block
is published with one list.extend, so readers only ever see complete blocks.
"""

import threading
from bisect import bisect_right

import config
from core.errors import NotInDomainError
from core.naturals import ensure_natural
from core.pairing import pair, unpair


class CanonicalBijection:
    """σ and σ⁻¹ for one ComputableDomain."""

    def __init__(self, domain, block=None):
        self.domain = domain
        self._block = block or config.RANK_BLOCK_DIAGONALS
        self._cum = [0]
        self._lock = threading.Lock()

    # -------------------------------------------------------------------------
    # table growth
    # -------------------------------------------------------------------------

    def _extend_block(self):
        start = len(self._cum) - 1
        total = self._cum[-1]
        block = []
        for w in range(start, start + self._block):
            total += self.domain.diagonal_count(w)
            block.append(total)
        self._cum.extend(block)

    def _cover_rank(self, n):
        """Grow until more than n members are tabulated."""
        if self._cum[-1] > n:
            return
        with self._lock:
            while self._cum[-1] <= n:
                self._extend_block()

    def _cover_diagonal(self, w):
        """Grow until cum[w] is tabulated."""
        if len(self._cum) > w:
            return
        with self._lock:
            while len(self._cum) <= w:
                self._extend_block()

    @property
    def diagonals_tabulated(self):
        return len(self._cum) - 1

    # -------------------------------------------------------------------------
    # select / rank
    # -------------------------------------------------------------------------

    def forward(self, n):
        """σ(n): the (n+1)-th smallest member code."""
        ensure_natural(n, 'n')
        self._cover_rank(n)
        cum = self._cum
        w = bisect_right(cum, n) - 1
        i = self.domain.diagonal_select(w, n - cum[w])
        return pair(w - i, i)

    def inverse(self, code):
        """
        σ⁻¹(code): number of member codes strictly below code.

        Raises:
            NotInDomainError: code is not a member
        """
        x, i = unpair(code)
        if not self.domain.contains_pair(x, i):
            raise NotInDomainError(f"code {code} = <{x},{i}> is not in {self.domain.descriptor}")
        w = x + i
        self._cover_diagonal(w)
        return self._cum[w] + self.domain.diagonal_rank(w, i)
