"""
probe-incomparability — audit candidate reductions between pullbacks over
two disjoint columns S_j and S_l.

  mode fin:      B over calibrated(S_j) vs calibrated(S_l), calibrated search
  mode one-one:  C over bounded(S_j) vs bounded(S_l), two-copy collision

Candidates act on domain codes directly, or with --lift as maps on pullback
indices pushed through σ. Each candidate also gets a membership-preservation
window check between the two pullbacks; that check is informative only.
"""

import pandas as pd

from commands.report import Report, ReportEntry
from constructions.domains import bounded_calibrated_domain, calibrated_domain
from constructions.families import disjoint_family
from constructions.pullback import pullback
from core.errors import RangeViolation, UsageError
from parsers.set_spec_parser import parse_set_spec
from reductions.window_checks import check_membership_preservation
from rigidity.audits import (
    AuditResult, bounded_collision_audit, calibrated_autoreduction, recheck,
)
from rigidity.candidates import (
    generate_candidates, induced_domain_map, reduction_from_domain_map,
)
from utils.console import ok, section, warn

MODES = ('fin', 'one-one')


def _audit_points(T, S, N):
    return [x for x in range(N) if T.member(x) and not S.member(x)]


def _audit(f, S, T, x, mode, budget):
    if mode == 'fin':
        return calibrated_autoreduction(f, S, T, x, budget)
    return bounded_collision_audit(f, S, T, x)


def _preservation_entry(name, f, source, target, A, N):
    B_source = pullback(source, A)
    B_target = pullback(target, A)
    r = reduction_from_domain_map(f, source, target, B_source, B_target)
    try:
        verdict = check_membership_preservation(r, B_source, B_target, N)
    except RangeViolation as e:
        return ReportEntry(name, 'refuted', N, {
            'point': e.point, 'image': e.image, 'domain': e.domain,
        })
    return ReportEntry.from_verdict(name, verdict, claimed=False)


def run_probe_incomparability(a_spec, j, l, mode, generator_spec, window,
                              budget, lift=False, seed=None):
    """
    Args:
        a_spec: The set A pulled back over both domains
        j, l: Column indices; T = S_j is audited against S = S_l
        mode: 'fin' or 'one-one'
        generator_spec: Candidate families
        window: Audit points x < window, and the preservation window
        budget: Column members tried per point in mode fin
        lift: Treat candidates as maps on pullback indices

    Returns:
        Report: per-candidate audit and preservation entries, rows = per-point outcomes
    """
    if j == l:
        raise UsageError(f"--j and --l must differ, got {j} twice")
    if mode not in MODES:
        raise UsageError(f"--mode must be one of {', '.join(MODES)}, got {mode!r}")

    A = parse_set_spec(a_spec, default_seed=seed)
    T, S = disjoint_family(j), disjoint_family(l)
    build = calibrated_domain if mode == 'fin' else bounded_calibrated_domain
    source, target = build(T), build(S)
    candidates = generate_candidates(generator_spec, window, seed)
    points = _audit_points(T, S, window)

    report = Report('probe-incomparability', {
        'set': A.descriptor, 'j': j, 'l': l, 'mode': mode, 'generators': generator_spec,
        'window': window, 'budget': budget, 'lift': lift, 'seed': seed,
    })

    section(f"{source.descriptor} → {target.descriptor}: {len(candidates)} candidates, "
            f"{len(points)} points")
    rows = []
    for h in candidates:
        f = induced_domain_map(h, source, target) if lift else h
        first = None
        violation = None
        distinct = []
        for x in points:
            try:
                outcome = _audit(f, S, T, x, mode, budget)
            except RangeViolation as e:
                violation = violation or e
                rows.append({'candidate': h.name, 'x': x, 'result': 'range-violation'})
                continue
            rows.append({'candidate': h.name, 'x': x, 'result': outcome.result.value})
            if outcome.result is AuditResult.BUDGET_EXHAUSTED:
                distinct.append(outcome.stats['distinct'])
            elif first is None:
                if not recheck(outcome, f):
                    report.add(ReportEntry(f"{h.name}/replay", 'refuted', window,
                                           outcome.witness(), claimed=True))
                first = outcome

        if first is not None:
            entry = report.add(ReportEntry(f"{h.name}/audit", first.result.value, window, first.witness()))
        elif violation is not None:
            entry = report.add(ReportEntry(f"{h.name}/audit", 'refuted', window, {
                'point': violation.point, 'image': violation.image, 'domain': violation.domain,
            }))
        elif distinct:
            entry = report.add(ReportEntry(f"{h.name}/audit", 'budget-exhausted', window, {
                'points': len(distinct), 'max_distinct': max(distinct), 'budget': budget,
            }))
        else:
            entry = report.add(ReportEntry(f"{h.name}/audit", 'evidence', window, {'points': 0}))

        report.add(_preservation_entry(f"{h.name}/membership", f, source, target, A, window))
        ok(f"{h.name}: {entry.status}")

    if not points:
        warn(f"no audit points below {window}")
    report.rows = pd.DataFrame(rows, columns=['candidate', 'x', 'result'])
    return report
