"""
oracle — exhaustive checks on the finite universe {0..n-1}.

  compose     fibre bounds multiply under composition (n <= 4)
  pigeonhole  no injective map from k+1 points into k slots
  reduces     least table of a class carrying mask a onto mask b
  degrees     partition of all masks by mutual reducibility (n <= 3)
"""

import pandas as pd

import config
from commands.report import Report, ReportEntry
from core.errors import PreconditionError, UsageError
from oracle.finite_oracle import (
    classify_universe, composition_rule_check, degree_partition,
    pigeonhole_fact_check, reduces_exhaustive,
)
from reductions.reduction import ReductionClass
from utils.console import ok, section

CHECKS = ('compose', 'pigeonhole', 'reduces', 'degrees')

_CAPS = {
    'compose': config.ORACLE_MAX_N,
    'pigeonhole': config.PIGEONHOLE_MAX_N,
    'reduces': config.ORACLE_MAX_N,
    'degrees': config.DEGREE_PARTITION_MAX_N,
}


def _parse_class(text):
    try:
        return ReductionClass.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def run_oracle(n, check, k=None, a_mask=None, b_mask=None, cls='m'):
    """
    Args:
        n: Universe size
        check: One of CHECKS
        k: Slots for pigeonhole (default n-1)
        a_mask, b_mask: Masks for reduces
        cls: Reduction class for reduces and degrees

    Returns:
        Report
    """
    if check not in CHECKS:
        raise UsageError(f"--check must be one of {', '.join(CHECKS)}, got {check!r}")
    if not 1 <= n <= _CAPS[check]:
        raise UsageError(f"oracle {check} needs 1 <= n <= {_CAPS[check]}, got n={n}")
    report = Report('oracle', {'n': n, 'check': check})
    section(f"Finite oracle: {check}, n={n}")

    try:
        if check == 'compose':
            verdict = composition_rule_check(n)
            report.add(ReportEntry.from_verdict('composition-rule', verdict))
            report.rows = classify_universe(n)
        elif check == 'pigeonhole':
            k = n - 1 if k is None else k
            report.params['k'] = k
            verdict = pigeonhole_fact_check(k, n)
            report.add(ReportEntry.from_verdict(f"pigeonhole[k={k}]", verdict))
        elif check == 'reduces':
            if a_mask is None or b_mask is None:
                raise UsageError("reduces needs --a and --b masks")
            reduction_class = _parse_class(cls)
            report.params.update({'a': a_mask, 'b': b_mask, 'class': reduction_class.label})
            found, table = reduces_exhaustive(a_mask, b_mask, reduction_class, n)
            status = 'evidence' if found else 'refuted'
            report.add(ReportEntry(f"reduces[{reduction_class.label}]", status, n,
                                   {'table': table} if found else None))
        else:
            reduction_class = _parse_class(cls)
            report.params['class'] = reduction_class.label
            classes = degree_partition(n, reduction_class)
            report.add(ReportEntry(f"degrees[{reduction_class.label}]", 'evidence', n,
                                   {'classes': classes}))
            report.rows = pd.DataFrame(
                [{'mask': m, 'degree': i} for i, members in enumerate(classes) for m in members],
                columns=['mask', 'degree'],
            )
    except PreconditionError as e:
        raise UsageError(str(e)) from None

    ok(f"{report.entries[-1].name}: {report.entries[-1].status}")
    return report
