from collections import Counter

from constructions.domains import (
    bounded_calibrated_domain, calibrated_domain, full_domain, pyramid_domain, sigma,
)
from constructions.families import disjoint_family
from constructions.pullback import pullback, pullback_witness_q, pullback_witness_r
from core.builtin_sets import empty_set, evens
from core.omega_set import seeded_random_set
from core.pairing import pair, pi1
from reductions.reduction import ReductionClass
from reductions.window_checks import check_injectivity, check_membership_preservation


def test_cylinder_over_full_domain(random_42):
    C = pullback(full_domain(), random_42)
    assert all(C.member(n) == random_42.member(pi1(n)) for n in range(2000))


def test_bounded_evens_pullback_reads_first_coordinate():
    A = seeded_random_set(9)
    C = pullback(bounded_calibrated_domain(evens()), A)
    assert C.member(2) == A.member(0)


def test_empty_pulls_back_to_empty():
    B = pullback(calibrated_domain(evens()), empty_set())
    assert not any(B.member(n) for n in range(500))


def test_q_and_r_values():
    F = full_domain()
    assert [pullback_witness_q(F)(n) for n in range(10)] == [pi1(n) for n in range(10)]
    assert [pullback_witness_r(F)(x) for x in range(10)] == [pair(x, 0) for x in range(10)]

    E = bounded_calibrated_domain(evens())
    assert [pullback_witness_r(E)(x) for x in range(3)] == [0, 1, 3]


def test_q_fibres_follow_the_profile():
    E = bounded_calibrated_domain(evens())
    q = pullback_witness_q(E)
    counts = Counter(q(n) for n in range(20_000))
    # columns whose members all lie below the enumeration prefix
    covered = [x for x in counts if x < 100]
    assert covered
    assert all(counts[x] == (2 if x % 2 == 0 else 1) for x in covered)
    assert q.claimed_class == ReductionClass.bounded(2)

    P = pyramid_domain()
    qp = pullback_witness_q(P)
    counts = Counter(qp(n) for n in range(5000))
    assert all(counts[x] == x + 1 for x in range(50))
    assert qp.claimed_class == ReductionClass.finite_one()


def test_r_round_trip(evens_domains):
    for d in evens_domains:
        r = pullback_witness_r(d)
        assert all(pi1(sigma(d, r(x))) == x for x in range(1000))


def test_witnesses_preserve_membership(evens_domains):
    calibrators = [evens()] + [disjoint_family(k) for k in range(4)]
    domains = evens_domains + [
        build(S) for S in calibrators[1:] for build in (calibrated_domain, bounded_calibrated_domain)
    ]
    A = seeded_random_set(3)
    N = 10_000
    for d in domains:
        B = pullback(d, A)
        q = pullback_witness_q(d, of=A)
        r = pullback_witness_r(d, of=A)
        assert not check_membership_preservation(q, B, A, N).is_refuted
        assert not check_membership_preservation(r, A, B, N).is_refuted
        assert not check_injectivity(r, N).is_refuted


def test_witness_descriptors(random_42):
    d = pyramid_domain()
    q = pullback_witness_q(d, of=random_42)
    r = pullback_witness_r(d, of=random_42)
    assert q.source == r.target == pullback(d, random_42).descriptor
    assert q.target == r.source == 'random:seed=42'


def test_disjoint_family():
    S0, S1, S3 = disjoint_family(0), disjoint_family(1), disjoint_family(3)
    assert not any(S0.member(c) and S1.member(c) for c in range(10_000))
    assert S3.member(pair(3, 5))
    assert sum(disjoint_family(2).member(c) for c in range(10_000)) >= 100
