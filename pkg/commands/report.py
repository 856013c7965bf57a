"""
Report — what every command returns and the CLI serializes.

Statuses:
    evidence, refuted          window-check verdicts
    deviation, collision,      audit outcomes (expected dichotomy branches)
    budget-exhausted
    error                      a replay or evaluation failed

Only a refuted entry marked `claimed` (a property the command asserts should
hold) turns the exit code to 2.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import pandas as pd

import config

STATUSES = ('evidence', 'refuted', 'deviation', 'collision', 'budget-exhausted', 'error')

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REFUTED = 2


def _jsonable(value):
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (tuple, set, frozenset)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    raise TypeError(f"not JSON serializable: {type(value).__name__}")


@dataclass(frozen=True)
class ReportEntry:
    name: str
    status: str
    window: int
    witness: dict | None = None
    claimed: bool = False

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @classmethod
    def from_verdict(cls, name, verdict, claimed=True):
        """Wrap a window-check Verdict; evidence details travel as the witness."""
        witness = {**(verdict.counterexample or {}), **verdict.details}
        if verdict.note:
            witness['note'] = verdict.note
        return cls(name, verdict.status.value, verdict.window, witness or None, claimed)

    def as_dict(self):
        return {
            'name': self.name,
            'status': self.status,
            'window': self.window,
            'witness': self.witness,
            'claimed': self.claimed,
        }


@dataclass
class Report:
    command: str
    params: dict
    entries: list = field(default_factory=list)
    rows: pd.DataFrame | None = None

    def add(self, entry):
        self.entries.append(entry)
        return entry

    @property
    def exit_code(self):
        refuted = any(e.claimed and e.status == 'refuted' for e in self.entries)
        return EXIT_REFUTED if refuted else EXIT_OK

    def tally(self):
        """Entry count per status."""
        if not self.entries:
            return {}
        counts = pd.Series([e.status for e in self.entries]).value_counts()
        return {str(k): int(v) for k, v in counts.sort_index().items()}

    def as_dict(self):
        return {
            'schema': config.REPORT_SCHEMA_VERSION,
            'command': self.command,
            'params': self.params,
            'verdicts': [e.as_dict() for e in self.entries],
            'summary': self.tally(),
            'exit_code': self.exit_code,
        }

    def to_json(self):
        return json.dumps(self.as_dict(), sort_keys=True, indent=2,
                          ensure_ascii=False, default=_jsonable) + '\n'

    def to_frame(self):
        """The command's data table if it has one, else one row per verdict."""
        if self.rows is not None:
            return self.rows
        return pd.DataFrame(
            [{
                'name': e.name,
                'status': e.status,
                'window': e.window,
                'claimed': e.claimed,
                'witness': json.dumps(e.witness, sort_keys=True, default=_jsonable),
            } for e in self.entries],
            columns=['name', 'status', 'window', 'claimed', 'witness'],
        )
