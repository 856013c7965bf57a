"""
Verdicts — outcome of a window check.

A window check either refutes a universally quantified claim with a concrete
counterexample, or reports that no violation exists below the window. It
never proves the claim.
"""

from dataclasses import dataclass, field
from enum import Enum


class VerdictStatus(str, Enum):
    REFUTED = 'refuted'
    EVIDENCE_UP_TO = 'evidence'


@dataclass(frozen=True)
class Verdict:
    """
    Attributes:
        status: REFUTED or EVIDENCE_UP_TO
        window: Size N of the checked initial segment
        counterexample: Witness record for REFUTED, else None
        details: Extra measurements (pairs checked, largest fibre, ...)
        note: Caveat attached to the evidence
    """
    status: VerdictStatus
    window: int
    counterexample: dict | None = None
    details: dict = field(default_factory=dict)
    note: str = ''

    @classmethod
    def refuted(cls, window, counterexample, **details):
        return cls(VerdictStatus.REFUTED, window, dict(counterexample), details)

    @classmethod
    def evidence(cls, window, note='', **details):
        return cls(VerdictStatus.EVIDENCE_UP_TO, window, None, details, note)

    @property
    def is_refuted(self):
        return self.status is VerdictStatus.REFUTED

    def as_dict(self):
        return {
            'status': self.status.value,
            'window': self.window,
            'counterexample': self.counterexample,
            'details': self.details,
            'note': self.note,
        }
