"""
audit-pigeonhole — sweep the chain pigeonhole dichotomy over a candidate corpus.

Every (candidate, y) must end in a deviation or a collision; both are
expected outcomes. A witness that fails to replay is a claimed refutation.
"""

import pandas as pd

from commands.report import Report, ReportEntry
from core.errors import UsageError
from rigidity.audits import AuditResult, pigeonhole_audit, recheck
from rigidity.candidates import generate_candidates
from utils.console import info, ok, section, warn


def run_audit_pigeonhole(generator_spec, k, Y, window, seed=None):
    """
    Args:
        generator_spec: Candidate families, e.g. "adversary:k=2+affine:amax=3"
        k: Thickening factor (>= 1)
        Y: Sweep y < Y
        window: Default range for seeded families

    Returns:
        Report: one entry per candidate, a replay entry, rows = outcome tally
    """
    if k < 1:
        raise UsageError(f"--k must be >= 1, got {k}")
    candidates = generate_candidates(generator_spec, window, seed)
    report = Report('audit-pigeonhole', {
        'generators': generator_spec, 'k': k, 'Y': Y, 'window': window, 'seed': seed,
    })

    section(f"Pigeonhole audit: {len(candidates)} candidates, k={k}, y < {Y}")
    records = []
    failed_replays = []
    for h in candidates:
        first = {}
        for y in range(Y):
            outcome = pigeonhole_audit(h, k, y)
            records.append({'candidate': h.name, 'result': outcome.result.value})
            first.setdefault(outcome.result, outcome)
            if not recheck(outcome, h):
                failed_replays.append({'candidate': h.name, **outcome.witness()})

        shown = first.get(AuditResult.COLLISION) or first.get(AuditResult.DEVIATION)
        status = shown.result.value if shown else 'evidence'
        witness = shown.witness() if shown else None
        report.add(ReportEntry(h.name, status, Y, witness))

    if failed_replays:
        report.add(ReportEntry('replay', 'refuted', Y, failed_replays[0], claimed=True))
        warn(f"{len(failed_replays)} witnesses failed to replay")
    else:
        report.add(ReportEntry('replay', 'evidence', Y, {'replayed': len(records)}, claimed=True))
        ok(f"{len(records)} outcomes, all replayed")

    columns = [r.value for r in AuditResult]
    frame = pd.DataFrame(records, columns=['candidate', 'result'])
    if frame.empty:
        report.rows = pd.DataFrame(columns=['candidate', *columns])
        return report
    tally = (frame.groupby('candidate', sort=False)['result']
             .value_counts()
             .unstack(fill_value=0)
             .reindex(columns=columns, fill_value=0)
             .reset_index())
    tally.columns.name = None
    report.rows = tally
    info(f"collisions: {int(tally['collision'].sum())}, deviations: {int(tally['deviation'].sum())}")
    return report
