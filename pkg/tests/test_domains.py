import math
import threading

import pytest

from constructions.bijection import CanonicalBijection
from constructions.domains import (
    ColumnProfile, bounded_calibrated_domain, calibrated_domain, full_domain,
    pyramid_domain, sigma, sigma_inv,
)
from core.builtin_sets import evens
from core.errors import NonComputableSetError, NotInDomainError
from core.omega_set import seeded_random_set
from core.pairing import pair, unpair
from constructions.families import disjoint_family
from reductions.reduction import ReductionClass


def members_below(d, limit):
    return [c for c in range(limit) if d.predicate(c)]


def test_pyramid_membership():
    P = pyramid_domain()
    assert pair(0, 0) in P
    assert pair(2, 3) not in P
    assert P.column_size(4) == 5
    assert P.column_profile(4) is ColumnProfile.LINEAR


def test_calibrated_membership():
    D = calibrated_domain(evens())
    assert pair(2, 7) in D
    assert pair(3, 1) not in D
    assert pair(3, 0) in D
    assert D.column_size(2) == math.inf
    assert D.column_size(3) == 1


def test_bounded_membership():
    E = bounded_calibrated_domain(evens())
    assert E.column_size(2) == 2
    assert E.column_size(3) == 1
    assert pair(2, 1) in E
    assert pair(5, 2) not in E


def test_full_domain_sigma_is_identity():
    F = full_domain()
    assert all(sigma(F, n) == n for n in range(1000))
    assert all(pair(0, i) in F for i in range(20))


def test_bounded_evens_sigma_and_rank():
    E = bounded_calibrated_domain(evens())
    assert [sigma(E, n) for n in range(3)] == [0, 1, 2]
    assert [sigma_inv(E, pair(x, 0)) for x in range(3)] == [0, 1, 3]


def test_every_column_starts_at_zero(evens_domains):
    for d in evens_domains:
        assert all(pair(x, 0) in d for x in range(500))


def test_sigma_matches_brute_force_enumeration(evens_domains):
    for d in evens_domains + [calibrated_domain(disjoint_family(1))]:
        members = members_below(d, 3000)
        assert [sigma(d, n) for n in range(len(members))] == members


def test_round_trip_and_monotonicity(evens_domains):
    for d in evens_domains:
        codes = [sigma(d, n) for n in range(10_000)]
        assert all(a < b for a, b in zip(codes, codes[1:]))
        assert all(sigma_inv(d, c) == n for n, c in enumerate(codes))


def test_profile_agrees_with_predicate(evens_domains):
    for d in evens_domains:
        for code in range(100_000):
            x, i = unpair(code)
            assert d.predicate(code) == (i < d.column_size(x))


def test_sigma_inv_rejects_non_members():
    E = bounded_calibrated_domain(evens())
    with pytest.raises(NotInDomainError):
        sigma_inv(E, pair(3, 1))
    with pytest.raises(KeyError):
        sigma_inv(pyramid_domain(), pair(0, 1))


def test_random_calibrator_is_rejected():
    with pytest.raises(NonComputableSetError):
        calibrated_domain(seeded_random_set(1))
    with pytest.raises(NonComputableSetError):
        bounded_calibrated_domain(seeded_random_set(1))


def test_projection_classes():
    assert bounded_calibrated_domain(evens()).projection_class() == ReductionClass.bounded(2)
    assert pyramid_domain().projection_class() == ReductionClass.finite_one()
    assert calibrated_domain(evens()).projection_class() == ReductionClass.many_one()
    assert full_domain().projection_class() == ReductionClass.many_one()


def test_block_size_does_not_change_sigma():
    D = calibrated_domain(evens())
    small = CanonicalBijection(D, block=1)
    assert [small.forward(n) for n in range(2000)] == [sigma(D, n) for n in range(2000)]
    assert small.diagonals_tabulated >= 1


def test_concurrent_readers_agree():
    D = pyramid_domain()
    expected = members_below(D, 5000)
    results = []

    def worker():
        results.append([sigma(D, n) for n in range(len(expected))])

    threads = [threading.Thread(target=worker) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == expected for r in results)
