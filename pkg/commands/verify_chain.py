"""
verify-chain — window checks for the thickening chain A, A_(2), A_(3), ...

For each k the down, up and chain witnesses are checked for membership
preservation, and the fibre claims of their classes are tested.
"""

from commands.report import Report, ReportEntry
from constructions.thickening import (
    chain_witness, thicken, thicken_witness_down, thicken_witness_up,
)
from core.errors import UsageError
from parsers.set_spec_parser import parse_set_spec
from reductions.window_checks import (
    check_injectivity, check_membership_preservation, check_preimage_bound,
)
from utils.console import info, ok, section, warn


def run_verify_chain(set_spec, kmax, window, seed=None):
    """
    Args:
        set_spec: Base set A
        kmax: Largest thickening factor checked (>= 1)
        window: N for every check

    Returns:
        Report: one claimed entry per (k, witness, check)
    """
    if kmax < 1:
        raise UsageError(f"--kmax must be >= 1, got {kmax}")
    A = parse_set_spec(set_spec, default_seed=seed)
    report = Report('verify-chain', {
        'set': A.descriptor, 'kmax': kmax, 'window': window, 'seed': seed,
    })

    section(f"Thickening chain over {A.descriptor}")
    N = window
    for k in range(1, kmax + 1):
        A_k = thicken(A, k)
        A_next = thicken(A, k + 1)
        down = thicken_witness_down(k, of=A)
        up = thicken_witness_up(k, of=A)
        chain = chain_witness(k, of=A)

        checks = [
            (f"k={k}/down/membership", check_membership_preservation(down, A_k, A, N)),
            (f"k={k}/down/preimage", check_preimage_bound(down, k, N, N // k)),
            (f"k={k}/up/membership", check_membership_preservation(up, A, A_k, N)),
            (f"k={k}/up/injectivity", check_injectivity(up, N)),
            (f"k={k}/up/preimage", check_preimage_bound(up, 1, N, k * N)),
            (f"k={k}/chain/membership", check_membership_preservation(chain, A_k, A_next, N)),
            (f"k={k}/chain/injectivity", check_injectivity(chain, N)),
            (f"k={k}/chain/preimage", check_preimage_bound(chain, 1, N, 2 * N)),
        ]
        for name, verdict in checks:
            report.add(ReportEntry.from_verdict(name, verdict))

        refuted = [name for name, verdict in checks if verdict.is_refuted]
        if refuted:
            warn(f"k={k}: refuted {', '.join(refuted)}")
        else:
            ok(f"k={k}: {len(checks)} checks, no counterexample below {N}")

    info(f"{len(report.entries)} verdicts")
    return report
