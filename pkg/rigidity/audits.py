"""
Audits — the per-point dichotomies at the heart of the non-reducibility proofs.

Each audit evaluates a candidate at one point and returns an AuditOutcome
that can be replayed against the candidate with recheck():

  - pigeonhole_audit        k+1 inputs into k slots: Deviation or Collision
  - calibrated_autoreduction budgeted search for a column image inside S
  - bounded_collision_audit two copies of x, one slot left: Deviation or Collision
  - pyramid_autoreduction   least deviating column member, else BoundRefuted

Deviation is preferred over Collision whenever both are visible at a point.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum

from constructions.domains import bounded_calibrated_domain
from core.errors import BoundRefuted, PreconditionError, RangeViolation
from core.naturals import ensure_natural
from core.pairing import pair, pi1
from rigidity.candidates import CandidateMap, CandidateMode


class AuditResult(str, Enum):
    DEVIATION = 'deviation'
    COLLISION = 'collision'
    BUDGET_EXHAUSTED = 'budget-exhausted'


class AuditContext(str, Enum):
    CHAIN_PIGEONHOLE = 'chain-pigeonhole'
    CALIBRATED_SEARCH = 'calibrated-search'
    BOUNDED_COLLISION = 'bounded-collision'


@dataclass(frozen=True)
class AuditOutcome:
    """
    Result of one audit at one point.

    Attributes:
        result: Deviation, Collision or BudgetExhausted
        context: The dichotomy that produced it
        point: Deviation point, or first colliding input
        value: Deviating value, or the common image
        point2: Second colliding input (Collision only)
        stats: Search statistics (BudgetExhausted only)
        params: Everything needed to replay the audit
    """
    result: AuditResult
    context: AuditContext
    point: int | None = None
    value: int | None = None
    point2: int | None = None
    stats: dict = field(default_factory=dict)
    params: dict = field(default_factory=dict)

    @classmethod
    def deviation(cls, context, point, value, **params):
        return cls(AuditResult.DEVIATION, context, point, value, params=params)

    @classmethod
    def collision(cls, context, point1, point2, value, **params):
        return cls(AuditResult.COLLISION, context, point1, value, point2, params=params)

    @classmethod
    def budget_exhausted(cls, context, stats, **params):
        return cls(AuditResult.BUDGET_EXHAUSTED, context, stats=stats, params=params)

    def witness(self):
        """Plain-dict witness for reports."""
        if self.result is AuditResult.DEVIATION:
            data = {'point': self.point, 'value': self.value}
        elif self.result is AuditResult.COLLISION:
            data = {'point1': self.point, 'point2': self.point2, 'value': self.value}
        else:
            data = dict(self.stats)
        data.update(self.params)
        return data


# =============================================================================
# THICKENING CHAIN (k+1 inputs, k slots)
# =============================================================================

def chain_autoreductions(h, k):
    """
    Extract f_0..f_k from a candidate h: A_(k+1) → A_(k).

    f_j(y) = ⌊h((k+1)y + j) / k⌋

    Returns:
        list of k+1 CandidateMaps
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")

    def extracted(j):
        return CandidateMap(CandidateMode.CUSTOM, f"f{j}[{h.name},k={k}]",
                            lambda y: h((k + 1) * y + j) // k, (('j', j), ('k', k)))

    return [extracted(j) for j in range(k + 1)]


def pigeonhole_audit(h, k, y):
    """
    Run the pigeonhole dichotomy for h at y.

    Returns Deviation(j, f_j(y)) for the least deviating j. Otherwise all
    k+1 images lie in {ky..ky+k-1} and two of them must coincide: the first
    repeat is returned as Collision(input1, input2, value).

    Example:
        pigeonhole_audit(identity, 2, 5) → Deviation(0, 7)
    """
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    ensure_natural(y, 'y')
    context = AuditContext.CHAIN_PIGEONHOLE

    inputs = [(k + 1) * y + j for j in range(k + 1)]
    images = [h(x) for x in inputs]
    for j, image in enumerate(images):
        fj = image // k
        if fj != y:
            return AuditOutcome.deviation(context, j, fj, y=y, k=k)

    first_seen = {}
    for x, image in zip(inputs, images):
        if image in first_seen:
            return AuditOutcome.collision(context, first_seen[image], x, image, y=y, k=k)
        first_seen[image] = x
    raise AssertionError(f"{k + 1} images in {k} slots without a repeat at y={y}")


# =============================================================================
# PYRAMID (column of x+1 members)
# =============================================================================

def pyramid_autoreduction(f, c):
    """
    Build g from a candidate f claimed bounded by c on the pyramid set.

    g(x) = x below c; above, g(x) = f(<x,y>) for the least y <= x with
    f(<x,y>) != x.

    Raises (when evaluated):
        BoundRefuted: all x+1 column members map to x
    """
    if c < 1:
        raise PreconditionError(f"c must be >= 1, got {c}")

    def rule(x):
        if x < c:
            return x
        column = [pair(x, y) for y in range(x + 1)]
        for code in column:
            value = f(code)
            if value != x:
                return value
        raise BoundRefuted(x, column, c)

    return CandidateMap(CandidateMode.CUSTOM, f"pyramid-g[{f.name},c={c}]", rule, (('c', c),))


# =============================================================================
# CALIBRATED DOMAIN (infinite columns over S)
# =============================================================================

def calibrated_autoreduction(f, S, T, x, budget):
    """
    Budgeted search for the first column image of x whose projection lands in S.

    Args:
        f: Candidate on codes
        S, T: Calibrating sets; requires x ∈ T and x ∉ S
        x: Column index
        budget: Number of column members <x,0>..<x,budget-1> to try

    Returns:
        Deviation(x, y) at the first π₁(f(<x,i>)) = y in S, else
        BudgetExhausted with distinct, max_multiplicity and evaluated
    """
    ensure_natural(x, 'x')
    ensure_natural(budget, 'budget')
    if not T.member(x) or S.member(x):
        raise PreconditionError(f"calibrated audit needs x in T and not in S, got x={x}")
    context = AuditContext.CALIBRATED_SEARCH

    projections = set()
    images = Counter()
    for i in range(budget):
        image = f(pair(x, i))
        y = pi1(image)
        if S.member(y):
            return AuditOutcome.deviation(context, x, y, i=i)
        projections.add(y)
        images[image] += 1

    stats = {
        'distinct': len(projections),
        'max_multiplicity': max(images.values(), default=0),
        'evaluated': budget,
    }
    return AuditOutcome.budget_exhausted(context, stats, x=x)


# =============================================================================
# BOUNDED CALIBRATED DOMAIN (at most two copies)
# =============================================================================

def bounded_calibrated_autoreductions(f, T):
    """
    g0(x) = π₁(f(<x,0>));  g1(x) = π₁(f(<x,1>)) if x ∈ T else x.
    """
    g0 = CandidateMap(CandidateMode.CUSTOM, f"g0[{f.name}]", lambda x: pi1(f(pair(x, 0))))
    g1 = CandidateMap(CandidateMode.CUSTOM, f"g1[{f.name}]",
                      lambda x: pi1(f(pair(x, 1))) if T.member(x) else x)
    return g0, g1


def bounded_collision_audit(f, S, T, x):
    """
    Two copies of x in E_T must land on one slot <x,0> of E_S unless f deviates.

    Returns:
        Deviation(x, g0(x)) or Deviation(x, g1(x)) with params copy=0/1,
        else Collision(<x,0>, <x,1>, <x,0>)

    Raises:
        PreconditionError: x ∉ T or x ∈ S
        RangeViolation: an image is not a member code of E_S
    """
    ensure_natural(x, 'x')
    if not T.member(x) or S.member(x):
        raise PreconditionError(f"bounded audit needs x in T and not in S, got x={x}")
    context = AuditContext.BOUNDED_COLLISION
    target = bounded_calibrated_domain(S)

    copies = (pair(x, 0), pair(x, 1))
    images = [f(code) for code in copies]
    for code, image in zip(copies, images):
        if not target.predicate(image):
            raise RangeViolation(code, image, target.descriptor)

    for copy, image in enumerate(images):
        if pi1(image) != x:
            return AuditOutcome.deviation(context, x, pi1(image), copy=copy)
    return AuditOutcome.collision(context, copies[0], copies[1], images[0])


# =============================================================================
# REPLAY
# =============================================================================

def recheck(outcome, candidate):
    """
    Replay an outcome against the candidate that produced it.

    Returns:
        True if the witness holds (BudgetExhausted always holds)
    """
    params = outcome.params
    if outcome.result is AuditResult.BUDGET_EXHAUSTED:
        return True
    if outcome.result is AuditResult.COLLISION:
        return (outcome.point != outcome.point2
                and candidate(outcome.point) == outcome.value
                and candidate(outcome.point2) == outcome.value)

    if outcome.context is AuditContext.CHAIN_PIGEONHOLE:
        y, k, j = params['y'], params['k'], outcome.point
        value = candidate((k + 1) * y + j) // k
        return value == outcome.value and value != y
    if outcome.context is AuditContext.CALIBRATED_SEARCH:
        value = pi1(candidate(pair(outcome.point, params['i'])))
        return value == outcome.value and value != outcome.point
    value = pi1(candidate(pair(outcome.point, params['copy'])))
    return value == outcome.value and value != outcome.point
