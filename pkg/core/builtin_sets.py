"""
Builtin Sets — the named sets of the spec mini-language.
"""

from core.naturals import ensure_natural
from core.omega_set import explicit_rule

# Deterministic Miller-Rabin witnesses for all n < 2^64
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic primality for 64-bit naturals."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        y = pow(a, d, n)
        if y in (1, n - 1):
            continue
        for _ in range(s - 1):
            y = y * y % n
            if y == n - 1:
                break
        else:
            return False
    return True


def evens():
    return explicit_rule('evens', lambda x: x % 2 == 0)


def odds():
    return explicit_rule('odds', lambda x: x % 2 == 1)


def primes():
    return explicit_rule('primes', is_prime)


def empty_set():
    return explicit_rule('empty', lambda x: False)


def full_set():
    return explicit_rule('full', lambda x: True)


def finite_set(values):
    """
    Finite set from explicit members.

    Example:
        finite_set([3, 1]) → "explicit:[1,3]"
    """
    members = frozenset(ensure_natural(v, 'member') for v in values)
    listing = ','.join(str(v) for v in sorted(members))
    return explicit_rule(f"explicit:[{listing}]", members.__contains__)


BUILTIN_SETS = {
    'evens': evens,
    'odds': odds,
    'primes': primes,
    'empty': empty_set,
    'full': full_set,
}
