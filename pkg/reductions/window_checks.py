"""
Window Checks — refute or gather evidence for reduction claims on [0, N).

Each check reports the least counterexample it finds. A clean sweep yields
EvidenceUpTo(N), which says nothing about inputs at or beyond N.
"""

import numpy as np

from core.errors import PreconditionError
from core.naturals import ensure_natural
from reductions.verdict import Verdict


def check_membership_preservation(r, A, B, N):
    """
    Check x ∈ A ⟺ r(x) ∈ B for all x < N.

    Returns:
        Verdict: Refuted at the least violating x, else EvidenceUpTo(N)

    Raises:
        CapacityError: r(x) leaves the 64-bit range
    """
    ensure_natural(N, 'N')
    for x in range(N):
        fx = r(x)
        in_source = A.member(x)
        in_target = B.member(fx)
        if in_source != in_target:
            return Verdict.refuted(N, {
                'x': x, 'fx': fx,
                'in_source': in_source, 'in_target': in_target,
            })
    return Verdict.evidence(N)


def check_injectivity(r, N):
    """
    Look for x < x' < N with r(x) == r(x'), least x' first.
    """
    ensure_natural(N, 'N')
    first_seen = {}
    for x in range(N):
        fx = r(x)
        if fx in first_seen:
            return Verdict.refuted(N, {'x': first_seen[fx], 'x_prime': x, 'value': fx})
        first_seen[fx] = x
    return Verdict.evidence(N, distinct_values=len(first_seen))


def preimage_counts(r, N, M):
    """
    Forward sweep: count |{x < N : r(x) = y}| for every y < M.

    Returns:
        np.ndarray: int64 counts of length M
    """
    ensure_natural(N, 'N')
    ensure_natural(M, 'M')
    hits = [fx for fx in (r(x) for x in range(N)) if fx < M]
    return np.bincount(np.asarray(hits, dtype=np.int64), minlength=M)[:M]


def check_preimage_bound(r, c, N, M):
    """
    Check |r^{-1}(y)| <= c for every y < M using inputs x < N.

    Counts are lower bounds on the true fibre sizes: inputs at or beyond N
    are never seen.
    """
    if c < 1:
        raise PreconditionError(f"bound c must be >= 1, got {c}")
    counts = preimage_counts(r, N, M)
    over = np.flatnonzero(counts > c)
    max_count = int(counts.max()) if counts.size else 0
    if over.size:
        y = int(over[0])
        witnesses = [x for x in range(N) if r(x) == y]
        return Verdict.refuted(N, {
            'y': y, 'count': int(counts[y]), 'bound': c,
            'preimages': witnesses[:c + 1],
        }, max_count=max_count, targets=M)
    return Verdict.evidence(
        N, note='preimage counts are lower bounds (inputs >= window unseen)',
        max_count=max_count, targets=M,
    )
