"""
Pullback Sets — {n : π₁(σ_d(n)) ∈ A} and their witnesses.

Over calibrated(S) this is B_S, over bounded(S) it is C_S, over the pyramid
the set C of the strict-hierarchy argument, and over the full domain the
cylinder A × ω.
"""

from constructions.domains import sigma, sigma_inv
from core.omega_set import OmegaSet, SetKind
from core.pairing import pair, pi1
from reductions.reduction import Reduction, ReductionClass


def pullback_descriptor(d, base):
    return f"pullback:domain={d.descriptor},of=({base})"


def pullback(d, A):
    """
    Reindex A along σ_d by first coordinate.

    Raises:
        CapacityError: deep selects whose codes leave 64 bits
    """
    return OmegaSet(
        SetKind.PULLBACK, pullback_descriptor(d, A.descriptor),
        lambda n: A.rule(pi1(sigma(d, n))),
        computable=A.computable,
    )


def _base(of):
    return of.descriptor if of is not None else 'A'


def pullback_witness_q(d, of=None):
    """
    q(n) = π₁(σ_d(n)), from the pullback to A.

    Claimed class follows the column profile: bounded(S) → bfin(2),
    pyramid → fin, calibrated/full → m.
    """
    base = _base(of)
    return Reduction(
        lambda n: pi1(sigma(d, n)), d.projection_class(),
        pullback_descriptor(d, base), base, f"q[{d.descriptor}]",
    )


def pullback_witness_r(d, of=None):
    """r(x) = σ_d⁻¹(<x,0>), from A to the pullback, injective."""
    base = _base(of)
    return Reduction(
        lambda x: sigma_inv(d, pair(x, 0)), ReductionClass.one_one(),
        base, pullback_descriptor(d, base), f"r[{d.descriptor}]",
    )
