import pytest
from hypothesis import given, strategies as st

from core.errors import DescriptorMismatchError, NotANaturalError
from reductions.reduction import (
    ClassTag, Reduction, ReductionClass, compose, identity_reduction, join_classes,
)

ONE = ReductionClass.one_one()
FIN = ReductionClass.finite_one()
MANY = ReductionClass.many_one()


def bdd(c):
    return ReductionClass.bounded(c)


def test_parse_labels():
    assert ReductionClass.parse('1') == ONE
    assert ReductionClass.parse('one-one') == ONE
    assert ReductionClass.parse('bfin(3)') == bdd(3)
    assert ReductionClass.parse('bfin:c=2') == bdd(2)
    assert ReductionClass.parse('fin') == FIN
    assert ReductionClass.parse('m') == MANY
    with pytest.raises(ValueError):
        ReductionClass.parse('two-one')


def test_bound_validation():
    with pytest.raises(ValueError):
        ReductionClass(ClassTag.BOUNDED_FINITE_ONE)
    with pytest.raises(ValueError):
        ReductionClass(ClassTag.ONE_ONE, 3)


def test_refinement_chain():
    chain = [ONE, bdd(1), bdd(4), FIN, MANY]
    for i, lower in enumerate(chain):
        for upper in chain[i:]:
            assert lower.refines(upper)
    assert not bdd(4).refines(bdd(2))
    assert not FIN.refines(bdd(9))
    assert not MANY.refines(FIN)
    assert not bdd(1).refines(ONE)


def test_join_rule():
    assert join_classes(ONE, ONE) == ONE
    assert join_classes(bdd(2), bdd(3)) == bdd(6)
    assert join_classes(ONE, bdd(3)) == bdd(3)
    assert join_classes(FIN, bdd(2)) == FIN
    assert join_classes(MANY, ONE) == MANY
    assert join_classes(FIN, MANY) == MANY


CLASSES = st.one_of(
    st.just(ONE), st.just(FIN), st.just(MANY),
    st.integers(min_value=1, max_value=8).map(bdd),
)


@given(CLASSES, CLASSES)
def test_join_is_commutative_and_an_upper_bound_of_fibres(a, b):
    joined = join_classes(a, b)
    assert joined == join_classes(b, a)
    if a.fibre_bound and b.fibre_bound:
        assert joined.fibre_bound == a.fibre_bound * b.fibre_bound


@given(CLASSES)
def test_identity_is_neutral(c):
    assert join_classes(ONE, c) == c


def test_compose_injections():
    r1 = Reduction(lambda x: 2 * x, ONE, 'A', 'B', 'double')
    r2 = Reduction(lambda x: 3 * x, ONE, 'B', 'C', 'triple')
    r = compose(r1, r2)
    assert [r(x) for x in range(5)] == [0, 6, 12, 18, 24]
    assert r.claimed_class == ONE
    assert (r.source, r.target) == ('A', 'C')


def test_compose_bounded_multiplies():
    r1 = Reduction(lambda x: x // 2, bdd(2), 'A', 'B')
    r2 = Reduction(lambda x: x // 3, bdd(3), 'B', 'C')
    r = compose(r1, r2)
    assert r.claimed_class == bdd(6)
    assert all(r(x) == x // 6 for x in range(200))


def test_compose_with_identity_keeps_map_and_class():
    r = Reduction(lambda x: x // 3, bdd(3), 'A', 'B')
    composed = compose(identity_reduction('A'), r)
    assert composed.claimed_class == bdd(3)
    assert all(composed(x) == r(x) for x in range(100))


def test_compose_rejects_mismatched_descriptors():
    r1 = Reduction(lambda x: x, ONE, 'A', 'B')
    r2 = Reduction(lambda x: x, ONE, 'C', 'D')
    with pytest.raises(DescriptorMismatchError):
        compose(r1, r2)


def test_reduction_validates_its_values():
    r = Reduction(lambda x: x - 1, MANY, 'A', 'B')
    with pytest.raises(NotANaturalError):
        r(0)
