"""
Finite Oracle — brute force over every function table on {0..n-1}.

Tables are enumerated in lexicographic order, so the first hit of any
search is the lexicographically least witness. Membership masks are
strings of '0'/'1' where character i is the membership of element i.
"""

import itertools
from dataclasses import dataclass

import numpy as np
import pandas as pd

import config
from core.errors import PreconditionError
from reductions.reduction import ClassTag
from reductions.verdict import Verdict


@dataclass(frozen=True)
class FiniteUniverse:
    """The universe {0..n-1} and its n^n function tables."""
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError(f"universe size must be >= 1, got {self.n}")

    @property
    def table_count(self):
        return self.n ** self.n

    def tables(self):
        return all_tables(self.n)


def _check_cap(n, cap, what):
    if not 1 <= n <= cap:
        raise PreconditionError(f"{what} needs 1 <= n <= {cap}, got n={n}")


def all_tables(n, size=None):
    """
    Every map from `size` points (default n) into {0..n-1}, lexicographic.

    Returns:
        np.ndarray of shape (n**size, size)
    """
    size = n if size is None else size
    return np.array(list(itertools.product(range(n), repeat=size)), dtype=np.int64).reshape(-1, size)


def fibre_sizes(tables, n):
    """Max fibre size per table; works on any (..., m) array of values < n."""
    counts = (tables[..., None] == np.arange(n)).sum(axis=-2)
    return counts.max(axis=-1)


def classify_table(t):
    """
    Returns:
        (injective, max_preimage)

    Example:
        classify_table([0, 0, 1]) → (False, 2)
    """
    values = np.asarray(t, dtype=np.int64)
    if values.size == 0:
        return True, 0
    max_preimage = int(np.bincount(values).max())
    return max_preimage <= 1, max_preimage


def _table_text(t):
    return '[' + ','.join(str(int(v)) for v in t) + ']'


def classify_universe(n):
    """DataFrame (table, injective, max_preimage) over all n^n tables."""
    _check_cap(n, config.ORACLE_MAX_N, 'classify_universe')
    tables = all_tables(n)
    max_pre = fibre_sizes(tables, n)
    return pd.DataFrame({
        'table': [_table_text(t) for t in tables],
        'injective': max_pre <= 1,
        'max_preimage': max_pre,
    })


# =============================================================================
# CLASS ALGEBRA
# =============================================================================

def composition_rule_check(n):
    """
    For all tables f, g on n points: fibre(g∘f) <= fibre(f)·fibre(g), and
    injective∘injective stays injective.

    Returns:
        Verdict: Refuted with the least (f, g) pair, else EvidenceUpTo
    """
    _check_cap(n, config.ORACLE_MAX_N, 'composition_rule_check')
    tables = all_tables(n)
    fibre = fibre_sizes(tables, n)

    # composed[f, g, x] = g(f(x))
    composed = tables[:, tables].transpose(1, 0, 2)
    composed_fibre = fibre_sizes(composed, n)
    bound = fibre[:, None] * fibre[None, :]
    both_injective = (fibre[:, None] <= 1) & (fibre[None, :] <= 1)
    bad = (composed_fibre > bound) | (both_injective & (composed_fibre > 1))

    pairs = int(tables.shape[0] ** 2)
    hits = np.argwhere(bad)
    if hits.size:
        f, g = (int(i) for i in hits[0])
        return Verdict.refuted(n, {
            'f': tables[f].tolist(), 'g': tables[g].tolist(),
            'composed': composed[f, g].tolist(),
            'fibre': int(composed_fibre[f, g]), 'bound': int(bound[f, g]),
        }, pairs_checked=pairs)
    return Verdict.evidence(n, pairs_checked=pairs)


def pigeonhole_fact_check(k, n):
    """
    No map from k+1 points into k slots is injective.

    n is the universe the k+1 points live in (k+1 <= n).
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    if not k + 1 <= n <= config.PIGEONHOLE_MAX_N:
        raise PreconditionError(
            f"pigeonhole check needs k+1 <= n <= {config.PIGEONHOLE_MAX_N}, got k={k}, n={n}"
        )
    maps = all_tables(k, size=k + 1)
    fibre = fibre_sizes(maps, k)
    injective = np.flatnonzero(fibre <= 1)
    if injective.size:
        return Verdict.refuted(n, {'map': maps[injective[0]].tolist()}, maps_checked=len(maps))
    return Verdict.evidence(n, maps_checked=len(maps), k=k)


# =============================================================================
# EXHAUSTIVE REDUCIBILITY
# =============================================================================

def parse_mask(mask, n=None):
    """'1100' → bool array [True, True, False, False]."""
    if not mask or set(mask) - {'0', '1'}:
        raise PreconditionError(f"mask must be a string of 0/1, got {mask!r}")
    if n is not None and len(mask) != n:
        raise PreconditionError(f"mask {mask!r} must have width {n}")
    return np.array([ch == '1' for ch in mask], dtype=bool)


def _class_filter(cls, fibre):
    if cls.tag is ClassTag.ONE_ONE:
        return fibre <= 1
    if cls.tag is ClassTag.BOUNDED_FINITE_ONE:
        return fibre <= cls.bound
    # every map on a finite universe is finite-one
    return np.ones_like(fibre, dtype=bool)


def reduces_exhaustive(a_mask, b_mask, cls, n):
    """
    Search all tables of class `cls` for one with x ∈ A ⟺ t(x) ∈ B.

    Returns:
        (found, witness table as list or None)

    Example:
        reduces_exhaustive('1100', '0011', one-one, 4) → (True, [2, 3, 0, 1])
    """
    _check_cap(n, config.ORACLE_MAX_N, 'reduces_exhaustive')
    a = parse_mask(a_mask, n)
    b = parse_mask(b_mask, n)
    tables = all_tables(n)
    preserves = (b[tables] == a).all(axis=1)
    ok = preserves & _class_filter(cls, fibre_sizes(tables, n))
    hits = np.flatnonzero(ok)
    if hits.size:
        return True, tables[hits[0]].tolist()
    return False, None


def degree_partition(n, cls):
    """
    Group all 2^n masks into classes of mutual reducibility under `cls`.

    Returns:
        list of lists of masks, each class sorted, classes ordered by first member
    """
    _check_cap(n, config.DEGREE_PARTITION_MAX_N, 'degree_partition')
    masks = [''.join(bits) for bits in itertools.product('01', repeat=n)]
    reach = {
        (a, b): reduces_exhaustive(a, b, cls, n)[0]
        for a in masks for b in masks
    }
    classes = []
    placed = set()
    for a in masks:
        if a in placed:
            continue
        members = [b for b in masks if reach[a, b] and reach[b, a]]
        placed.update(members)
        classes.append(members)
    return classes
