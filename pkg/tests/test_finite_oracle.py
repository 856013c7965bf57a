import itertools

import numpy as np
import pytest

from core.errors import PreconditionError
from oracle.finite_oracle import (
    FiniteUniverse, all_tables, classify_table, classify_universe, composition_rule_check,
    degree_partition, parse_mask, pigeonhole_fact_check, reduces_exhaustive,
)
from reductions.reduction import ReductionClass

CLASSES = [
    ReductionClass.one_one(), ReductionClass.bounded(1), ReductionClass.finite_one(),
    ReductionClass.many_one(),
]


def test_universe_tables():
    U = FiniteUniverse(3)
    assert U.table_count == 27
    tables = U.tables()
    assert tables.shape == (27, 3)
    assert tables[0].tolist() == [0, 0, 0] and tables[-1].tolist() == [2, 2, 2]
    assert np.all(tables < 3)
    with pytest.raises(PreconditionError):
        FiniteUniverse(0)


def test_classify_table():
    assert classify_table([0, 1, 2]) == (True, 1)
    assert classify_table([0, 0, 0]) == (False, 3)
    assert classify_table([0, 0, 1]) == (False, 2)


def test_classify_universe():
    df = classify_universe(2)
    assert df['table'].tolist() == ['[0,0]', '[0,1]', '[1,0]', '[1,1]']
    assert df['injective'].tolist() == [False, True, True, False]
    assert df['max_preimage'].tolist() == [2, 1, 1, 2]


@pytest.mark.parametrize('n, pairs', [(2, 16), (3, 729), (4, 65536)])
def test_composition_rule(n, pairs):
    verdict = composition_rule_check(n)
    assert not verdict.is_refuted
    assert verdict.details['pairs_checked'] == pairs


def test_composition_cap():
    with pytest.raises(PreconditionError):
        composition_rule_check(5)


@pytest.mark.parametrize('k, maps', [(1, 1), (2, 8), (3, 81), (4, 1024)])
def test_pigeonhole_fact(k, maps):
    verdict = pigeonhole_fact_check(k, k + 1)
    assert not verdict.is_refuted
    assert verdict.details['maps_checked'] == maps


def test_pigeonhole_preconditions():
    with pytest.raises(PreconditionError):
        pigeonhole_fact_check(3, 3)
    with pytest.raises(PreconditionError):
        pigeonhole_fact_check(0, 2)


def test_reduces_examples():
    one_one, many = ReductionClass.one_one(), ReductionClass.many_one()
    assert reduces_exhaustive('1010', '1010', one_one, 4) == (True, [0, 1, 2, 3])
    assert reduces_exhaustive('1010', '1010', many, 4) == (True, [0, 1, 0, 1])
    assert reduces_exhaustive('1111', '0000', many, 4) == (False, None)
    assert reduces_exhaustive('1100', '0011', one_one, 4) == (True, [2, 3, 0, 1])


def test_reduces_is_monotone_in_the_class():
    masks = [''.join(bits) for bits in itertools.product('01', repeat=3)]
    for a in masks:
        for b in masks:
            found = [reduces_exhaustive(a, b, cls, 3)[0] for cls in CLASSES]
            assert found == sorted(found)


def test_reduces_witnesses_re_verify():
    masks = [''.join(bits) for bits in itertools.product('01', repeat=3)]
    for a in masks:
        assert reduces_exhaustive(a, a, ReductionClass.one_one(), 3)[0]
        for b in masks:
            found, table = reduces_exhaustive(a, b, ReductionClass.many_one(), 3)
            if found:
                assert all((a[x] == '1') == (b[table[x]] == '1') for x in range(3))


def test_degree_partition():
    classes = degree_partition(2, ReductionClass.many_one())
    assert classes == [['00'], ['01', '10'], ['11']]
    partition = degree_partition(3, ReductionClass.one_one())
    assert sorted(m for c in partition for m in c) == sorted(
        ''.join(bits) for bits in itertools.product('01', repeat=3)
    )
    # one-one degrees on a finite universe are fixed by the member count
    assert all(len({m.count('1') for m in c}) == 1 for c in partition)
    with pytest.raises(PreconditionError):
        degree_partition(4, ReductionClass.many_one())


def test_masks():
    assert parse_mask('1100').tolist() == [True, True, False, False]
    with pytest.raises(PreconditionError):
        parse_mask('12')
    with pytest.raises(PreconditionError):
        parse_mask('101', 4)


def test_all_tables_of_other_shape():
    assert all_tables(2, size=3).shape == (8, 3)
