"""
Disjoint Families — the columns S_k = {<k,i> : i ∈ ω}.

Each S_k is decidable and infinite, and S_j ∩ S_l = ∅ for j != l.
"""

from core.naturals import ensure_natural
from core.omega_set import explicit_rule
from core.pairing import pi1


def disjoint_family(k):
    """S_k, decided by unpairing and comparing the first coordinate."""
    ensure_natural(k, 'k')
    return explicit_rule(f"column:k={k}", lambda c: pi1(c) == k)
