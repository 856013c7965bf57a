"""
Omega Sets — immutable, total membership oracles for subsets of ω.

Kinds:
  - ExplicitRule   evens, primes, finite lists, the columns S_k, ...
  - SeededRandom   counter-mode splitmix64 bits (stand-in for a typical set)
  - Complement     negation of another set
  - Pullback       reindexing along a domain bijection (constructions.pullback)
  - Thickening     A_(k) (constructions.thickening)

Every rule is a terminating computation, so membership is total and pure.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from core.naturals import ensure_natural

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SetKind(str, Enum):
    EXPLICIT_RULE = 'explicit-rule'
    SEEDED_RANDOM = 'seeded-random'
    COMPLEMENT = 'complement'
    PULLBACK = 'pullback'
    THICKENING = 'thickening'


@dataclass(frozen=True)
class OmegaSet:
    """
    A subset of ω given by a total decidable rule.

    Attributes:
        kind: How the set was built
        descriptor: Spec string that rebuilds the set (see parsers.set_spec_parser)
        rule: int -> bool, called only with validated naturals
        computable: False when the rule stands in for a non-computable set
        seed: Generator key of a SeededRandom set
    """
    kind: SetKind
    descriptor: str
    rule: Callable[[int], bool] = field(repr=False, compare=False)
    computable: bool = True
    seed: int | None = None

    def member(self, x):
        return bool(self.rule(ensure_natural(x, 'x')))

    def __contains__(self, x):
        return self.member(x)

    def __str__(self):
        return self.descriptor


# =============================================================================
# PSEUDO-RANDOM BITS
# =============================================================================

def splitmix64(z):
    """One splitmix64 step on a 64-bit integer."""
    z = (z + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def random_bit(seed, x):
    """Bit x of the stream keyed by seed: low bit of splitmix64(splitmix64(seed) ^ x)."""
    return splitmix64(splitmix64(seed & _MASK64) ^ x) & 1


def random_bits(seed, n):
    """
    First n bits of the stream keyed by seed, vectorized.

    Agrees with random_bit(seed, x) for every x < n.
    """
    key = np.uint64(splitmix64(seed & _MASK64))
    z = np.arange(n, dtype=np.uint64) ^ key
    z = z + np.uint64(_GOLDEN)
    z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    z = z ^ (z >> np.uint64(31))
    return (z & np.uint64(1)).astype(bool)


# =============================================================================
# BUILDERS
# =============================================================================

def explicit_rule(descriptor, rule):
    """Wrap a terminating predicate as an ExplicitRule set."""
    return OmegaSet(SetKind.EXPLICIT_RULE, descriptor, rule)


def seeded_random_set(seed):
    """
    Pseudo-random set keyed by seed.

    Membership of x does not depend on which other points were queried.
    """
    ensure_natural(seed, 'seed')
    return OmegaSet(
        SetKind.SEEDED_RANDOM, f"random:seed={seed}",
        lambda x: random_bit(seed, x) == 1,
        computable=False, seed=seed,
    )


def complement(A):
    """Complement of A; complement(complement(A)) has A's membership."""
    return OmegaSet(
        SetKind.COMPLEMENT, f"complement:of=({A.descriptor})",
        lambda x: not A.rule(x),
        computable=A.computable,
    )


# =============================================================================
# ACCESS
# =============================================================================

def member(A, x):
    """A's membership rule evaluated at x."""
    return A.member(x)


def prefix(A, n):
    """
    Characteristic bits of A on the window [0, n).

    Returns:
        np.ndarray: bool array of length n, bit i == member(A, i)
    """
    ensure_natural(n, 'n')
    if A.kind is SetKind.SEEDED_RANDOM:
        return random_bits(A.seed, n)
    return np.fromiter((A.rule(i) for i in range(n)), dtype=bool, count=n)
