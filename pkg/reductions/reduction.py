"""
Reductions — total maps ω→ω with a claimed reducibility class.

Class refinement:  OneOne ⊑ Bdd(1) ⊑ Bdd(c) ⊑ Bdd(c') (c ≤ c') ⊑ FiniteOne ⊑ ManyOne
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

from core.errors import DescriptorMismatchError
from core.naturals import ensure_natural


class ClassTag(str, Enum):
    ONE_ONE = 'one-one'
    BOUNDED_FINITE_ONE = 'bounded-finite-one'
    FINITE_ONE = 'finite-one'
    MANY_ONE = 'many-one'


_ORDER = {
    ClassTag.ONE_ONE: 0,
    ClassTag.BOUNDED_FINITE_ONE: 1,
    ClassTag.FINITE_ONE: 2,
    ClassTag.MANY_ONE: 3,
}


@dataclass(frozen=True)
class ReductionClass:
    """A reducibility notion; `bound` is set only for BoundedFiniteOne."""
    tag: ClassTag
    bound: int | None = None

    def __post_init__(self):
        if self.tag is ClassTag.BOUNDED_FINITE_ONE:
            if self.bound is None or self.bound < 1:
                raise ValueError(f"BoundedFiniteOne needs a bound c >= 1, got {self.bound}")
        elif self.bound is not None:
            raise ValueError(f"{self.tag.value} takes no bound")

    @classmethod
    def one_one(cls):
        return cls(ClassTag.ONE_ONE)

    @classmethod
    def bounded(cls, c):
        return cls(ClassTag.BOUNDED_FINITE_ONE, c)

    @classmethod
    def finite_one(cls):
        return cls(ClassTag.FINITE_ONE)

    @classmethod
    def many_one(cls):
        return cls(ClassTag.MANY_ONE)

    @classmethod
    def parse(cls, text):
        """
        Parse 'one-one', '1', 'bfin:c=3', 'bfin(3)', 'fin', 'many-one', 'm'.
        """
        t = text.strip().lower()
        if t in ('1', 'one-one', 'oneone'):
            return cls.one_one()
        if t in ('fin', 'finite-one'):
            return cls.finite_one()
        if t in ('m', 'many-one', 'manyone'):
            return cls.many_one()
        for head in ('bfin:c=', 'bfin(', 'bounded:c='):
            if t.startswith(head):
                return cls.bounded(int(t[len(head):].rstrip(')')))
        raise ValueError(f"unknown reduction class: {text!r}")

    @property
    def fibre_bound(self):
        """Global fibre bound implied by the class, or None if unbounded."""
        if self.tag is ClassTag.ONE_ONE:
            return 1
        return self.bound

    def refines(self, other):
        """True when every reduction of this class is also of `other`."""
        if self.fibre_bound is not None and other.tag is ClassTag.BOUNDED_FINITE_ONE:
            return self.fibre_bound <= other.bound
        if other.tag is ClassTag.ONE_ONE:
            return self.tag is ClassTag.ONE_ONE
        return _ORDER[self.tag] <= _ORDER[other.tag]

    @property
    def label(self):
        if self.tag is ClassTag.BOUNDED_FINITE_ONE:
            return f"bfin({self.bound})"
        return {ClassTag.ONE_ONE: '1', ClassTag.FINITE_ONE: 'fin', ClassTag.MANY_ONE: 'm'}[self.tag]

    def __str__(self):
        return self.label


def join_classes(first, second):
    """
    Class of second ∘ first.

    OneOne∘OneOne = OneOne; bounded∘bounded multiplies the bounds (OneOne
    counts as bound 1); both at most FiniteOne gives FiniteOne; else ManyOne.
    """
    if first.tag is ClassTag.ONE_ONE and second.tag is ClassTag.ONE_ONE:
        return ReductionClass.one_one()
    if first.fibre_bound is not None and second.fibre_bound is not None:
        return ReductionClass.bounded(first.fibre_bound * second.fibre_bound)
    if first.refines(ReductionClass.finite_one()) and second.refines(ReductionClass.finite_one()):
        return ReductionClass.finite_one()
    return ReductionClass.many_one()


@dataclass(frozen=True)
class Reduction:
    """
    A claimed reduction from `source` to `target`.

    Soundness is not a property of the value; window checks establish it.
    """
    map: Callable[[int], int] = field(repr=False, compare=False)
    claimed_class: ReductionClass
    source: str
    target: str
    name: str = ''

    def __call__(self, x):
        return ensure_natural(self.map(ensure_natural(x, 'x')), f"{self.name or 'map'}({x})")

    def __str__(self):
        return f"{self.name or 'f'}: {self.source} ≤_{self.claimed_class.label} {self.target}"


def identity_reduction(descriptor):
    """Identity on `descriptor`, class OneOne."""
    return Reduction(lambda x: x, ReductionClass.one_one(), descriptor, descriptor, 'id')


def compose(r1, r2):
    """
    r2 ∘ r1, from r1.source to r2.target.

    Raises:
        DescriptorMismatchError: r1.target != r2.source
    """
    if r1.target != r2.source:
        raise DescriptorMismatchError(
            f"cannot compose: {r1.target!r} is not {r2.source!r}"
        )
    f, g = r1.map, r2.map
    return Reduction(
        lambda x: g(f(x)),
        join_classes(r1.claimed_class, r2.claimed_class),
        r1.source, r2.target,
        f"{r2.name or 'g'}∘{r1.name or 'f'}",
    )
