from fractions import Fraction

from core.builtin_sets import evens
from core.omega_set import seeded_random_set
from core.pairing import pair
from rigidity.candidates import (
    affine, column_shuffle, constant_map, custom, identity_map, table,
)
from rigidity.deviation import column_image_audit, eventual_identity_report, preservation_rate


def test_identity_has_no_deviations():
    report = eventual_identity_report(identity_map(), 10_000)
    assert report.deviations == ()
    assert report.identity_tail_start == 0


def test_shift_deviates_everywhere():
    report = eventual_identity_report(affine(1, 1), 100)
    assert len(report.deviations) == 100
    assert report.identity_tail_start is None


def test_table_deviates_once():
    report = eventual_identity_report(table([(0, 5)]), 100)
    assert report.deviations == (0,)
    assert report.identity_tail_start == 1
    assert report.as_dict()['deviation_count'] == 1


def test_report_lists_exactly_the_deviations():
    g = custom('square-mod', lambda x: x * x % 97)
    report = eventual_identity_report(g, 300)
    assert set(report.deviations) == {x for x in range(300) if g(x) != x}


def test_preservation_rate():
    assert preservation_rate(identity_map(), seeded_random_set(4), 1000) == 1
    assert preservation_rate(affine(1, 1), evens(), 1000) == 0
    assert preservation_rate(identity_map(), evens(), 0) == 1


def test_shift_rate_on_random_set_is_pinned():
    rate = preservation_rate(affine(1, 1), seeded_random_set(7), 10_000)
    assert rate == Fraction(4927, 10_000)
    assert Fraction(45, 100) <= rate <= Fraction(55, 100)


def test_affine_candidates_fail_on_random_sets():
    for seed in range(1, 11):
        A = seeded_random_set(seed)
        for a in range(4):
            for b in range(4):
                if (a, b) == (1, 0):
                    continue
                assert preservation_rate(affine(a, b), A, 10_000) < Fraction(95, 100)


def test_column_images_identity():
    stats = column_image_audit(identity_map(), seeded_random_set(3), 5, 100)
    assert (stats.distinct, stats.max_multiplicity) == (100, 1)
    assert stats.growing is False


def test_column_images_constant():
    stats = column_image_audit(constant_map(0), seeded_random_set(3), 5, 100)
    assert (stats.distinct, stats.max_multiplicity, stats.half_multiplicity) == (1, 100, 50)
    assert stats.growing is True


def test_shuffle_is_one_sided():
    A = seeded_random_set(3)
    stats = column_image_audit(column_shuffle(1, 100), A, 5, 100)
    assert stats.agreeing == 100
    assert stats.agreement == 1
    assert stats.in_a == A.member(5)


def test_projection_ledger_counts_other_columns():
    A = evens()
    shift = custom('next-column', lambda z: pair(6, 0))
    stats = column_image_audit(shift, A, 5, 10)
    assert stats.agreeing == 0
    assert stats.as_dict()['agreement'] == 0.0
