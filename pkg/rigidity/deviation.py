"""
Rigidity probes — how far a candidate autoreduction is from the identity.
"""

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from core.naturals import ensure_natural
from core.pairing import pair, pi1


@dataclass(frozen=True)
class DeviationReport:
    """
    Points x < window with g(x) != x.

    identity_tail_start is the least n0 with no deviation in [n0, window);
    None when the last window point deviates.
    """
    window: int
    deviations: tuple
    identity_tail_start: int | None

    def as_dict(self):
        return {
            'window': self.window,
            'deviation_count': len(self.deviations),
            'first_deviations': list(self.deviations[:10]),
            'identity_tail_start': self.identity_tail_start,
        }


def eventual_identity_report(g, N):
    """
    Example:
        eventual_identity_report(table([(0, 5)]), 100) → deviations (0,), tail 1
    """
    ensure_natural(N, 'N')
    deviations = tuple(x for x in range(N) if g(x) != x)
    if not deviations:
        tail = 0
    elif deviations[-1] == N - 1:
        tail = None
    else:
        tail = deviations[-1] + 1
    return DeviationReport(N, deviations, tail)


def preservation_rate(g, A, N):
    """Fraction of x < N with x ∈ A iff g(x) ∈ A; 1 on an empty window."""
    ensure_natural(N, 'N')
    if N == 0:
        return Fraction(1)
    kept = sum(1 for x in range(N) if A.member(x) == A.member(g(x)))
    return Fraction(kept, N)


@dataclass(frozen=True)
class ColumnImageStats:
    """
    Window statistics for the images of one cylinder column.

    Attributes:
        x: Column index
        width: Number of column codes evaluated
        distinct: Distinct image codes
        max_multiplicity: Largest fibre among the images
        half_multiplicity: Same, over the first half of the window
        growing: Fibre grew between the halves (non-finite-to-one suspect)
        in_a: Whether x ∈ A
        agreeing: Images whose projection sits on the same side of A as x
    """
    x: int
    width: int
    distinct: int
    max_multiplicity: int
    half_multiplicity: int
    growing: bool
    in_a: bool
    agreeing: int

    @property
    def agreement(self):
        return Fraction(self.agreeing, self.width) if self.width else Fraction(1)

    def as_dict(self):
        return {
            'x': self.x,
            'width': self.width,
            'distinct': self.distinct,
            'max_multiplicity': self.max_multiplicity,
            'half_multiplicity': self.half_multiplicity,
            'growing': self.growing,
            'in_a': self.in_a,
            'agreeing': self.agreeing,
            'agreement': float(self.agreement),
        }


def column_image_audit(h, A, x, W):
    """
    Evaluate h on <x,0>..<x,W-1> and summarise the image.

    Example:
        column_image_audit(constant_map(0), A, 5, 100) → distinct 1, multiplicity 100
    """
    ensure_natural(x, 'x')
    ensure_natural(W, 'W')
    images = [h(pair(x, i)) for i in range(W)]
    in_a = A.member(x)

    full = Counter(images)
    half = Counter(images[:W // 2])
    max_full = max(full.values(), default=0)
    max_half = max(half.values(), default=0)
    agreeing = sum(1 for image in images if A.member(pi1(image)) == in_a)

    return ColumnImageStats(
        x=x,
        width=W,
        distinct=len(full),
        max_multiplicity=max_full,
        half_multiplicity=max_half,
        growing=max_full > max_half and max_half > 1,
        in_a=in_a,
        agreeing=agreeing,
    )
