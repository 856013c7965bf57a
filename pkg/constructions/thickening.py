"""
Thickening — A_(k) = {x : ⌊x/k⌋ ∈ A} and its reduction witnesses.

  down(k):   A_(k) → A        x ↦ ⌊x/k⌋                 bounded by k
  up(k):     A → A_(k)        x ↦ kx                    one-one
  chain(k):  A_(k) → A_(k+1)  x ↦ (k+1)⌊x/k⌋ + (x mod k) one-one
"""

from core.errors import PreconditionError
from core.naturals import ensure_natural
from core.omega_set import OmegaSet, SetKind
from reductions.reduction import Reduction, ReductionClass


def _check_k(k):
    ensure_natural(k, 'k')
    if k < 1:
        raise PreconditionError(f"thickening factor k must be >= 1, got {k}")
    return k


def thickened_descriptor(base, k):
    return f"thicken:k={k},of=({base})"


def thicken(A, k):
    """
    The k-thickening of A.

    Example:
        thicken(A, 3) contains 7 iff A contains 2
    """
    _check_k(k)
    return OmegaSet(
        SetKind.THICKENING, thickened_descriptor(A.descriptor, k),
        lambda x: A.rule(x // k),
        computable=A.computable,
    )


def _base(of):
    return of.descriptor if of is not None else 'A'


def thicken_witness_down(k, of=None):
    """x ↦ ⌊x/k⌋, reducing A_(k) to A with every fibre of size exactly k."""
    _check_k(k)
    base = _base(of)
    return Reduction(
        lambda x: x // k, ReductionClass.bounded(k),
        thickened_descriptor(base, k), base, f"down[k={k}]",
    )


def thicken_witness_up(k, of=None):
    """x ↦ kx, reducing A to A_(k) injectively."""
    _check_k(k)
    base = _base(of)
    return Reduction(
        lambda x: k * x, ReductionClass.one_one(),
        base, thickened_descriptor(base, k), f"up[k={k}]",
    )


def chain_map(k, x):
    """p(x) = (k+1)⌊x/k⌋ + (x mod k); ⌊p(x)/(k+1)⌋ == ⌊x/k⌋."""
    q, r = divmod(x, k)
    return (k + 1) * q + r


def chain_witness(k, of=None):
    """Strictly increasing embedding of A_(k) into A_(k+1)."""
    _check_k(k)
    base = _base(of)
    return Reduction(
        lambda x: chain_map(k, x), ReductionClass.one_one(),
        thickened_descriptor(base, k), thickened_descriptor(base, k + 1), f"chain[k={k}]",
    )
