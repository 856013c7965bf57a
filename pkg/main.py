#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
rigid-degrees — batch CLI
=========================
Run with:  python main.py <command> [flags]      (from project root)
           uv run python main.py <command> [flags]   (via uv)

Commands:
    verify-chain            window checks along the thickening chain
    audit-pigeonhole        pigeonhole dichotomy over a candidate corpus
    probe-incomparability   calibrated / two-copy audits between disjoint columns
    stress-biimmunity       column image statistics over a cylinder
    oracle                  exhaustive checks on a finite universe
    show-config             print the effective configuration

Reports go to stdout (or --out); progress goes to stderr.
Exit codes: 0 ok, 1 usage or capacity error, 2 a claimed property was refuted.
"""

import argparse
import os
import sys

# ── Ensure imports work from any working directory ─────────────────────────
PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
if PROJECT_ROOT not in sys.path:
    sys.path.insert(0, PROJECT_ROOT)

import config  # noqa: E402
from commands.audit_pigeonhole import run_audit_pigeonhole  # noqa: E402
from commands.oracle_check import CHECKS, run_oracle  # noqa: E402
from commands.probe_incomparability import MODES, run_probe_incomparability  # noqa: E402
from commands.report import EXIT_USAGE  # noqa: E402
from commands.stress_biimmunity import run_stress_biimmunity  # noqa: E402
from commands.verify_chain import run_verify_chain  # noqa: E402
from core.errors import DegreeKitError, UsageError  # noqa: E402
from utils.console import banner, err, set_quiet  # noqa: E402
from utils.report_io import write_report  # noqa: E402


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(message)


def _common_flags():
    common = _ArgumentParser(add_help=False)
    common.add_argument('--window', type=int, default=config.DEFAULT_WINDOW,
                        help=f"window N (default {config.DEFAULT_WINDOW})")
    common.add_argument('--seed', type=int, default=config.DEFAULT_SEED,
                        help=f"default seed for seeded sets and families (default {config.DEFAULT_SEED})")
    common.add_argument('--out', default=config.DEFAULT_OUT,
                        help="report path or 'stdout'")
    common.add_argument('--format', choices=config.OUTPUT_FORMATS, default=config.DEFAULT_FORMAT)
    common.add_argument('--quiet', action='store_true', help="no progress on stderr")
    return common


def build_parser():
    common = _common_flags()
    parser = _ArgumentParser(prog='rigid-degrees', description=__doc__.split('\n')[1])
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('verify-chain', parents=[common], help="thickening chain window checks")
    p.add_argument('--set', dest='set_spec', required=True)
    p.add_argument('--kmax', type=int, default=4)

    p = sub.add_parser('audit-pigeonhole', parents=[common], help="pigeonhole dichotomy sweep")
    p.add_argument('--generators', required=True)
    p.add_argument('--k', type=int, default=2)
    p.add_argument('--ymax', type=int, default=1_000, help="sweep y < ymax")

    p = sub.add_parser('probe-incomparability', parents=[common], help="audits between disjoint columns")
    p.add_argument('--set', dest='set_spec', required=True)
    p.add_argument('--j', type=int, default=0)
    p.add_argument('--l', type=int, default=1)
    p.add_argument('--mode', choices=MODES, default='one-one')
    p.add_argument('--generators', default='identity')
    p.add_argument('--budget', type=int, default=config.DEFAULT_BUDGET)
    p.add_argument('--lift', action='store_true', help="candidates act on pullback indices")

    p = sub.add_parser('stress-biimmunity', parents=[common], help="cylinder column statistics")
    p.add_argument('--set', dest='set_spec', required=True)
    p.add_argument('--x-min', type=int, default=0)
    p.add_argument('--x-max', type=int, default=10)
    p.add_argument('--width', type=int, default=config.DEFAULT_COLUMN_WIDTH)
    p.add_argument('--generators', default=None)

    p = sub.add_parser('oracle', parents=[common], help="finite-universe exhaustive checks")
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--check', choices=CHECKS, default='compose')
    p.add_argument('--k', type=int, default=None)
    p.add_argument('--a', dest='a_mask', default=None)
    p.add_argument('--b', dest='b_mask', default=None)
    p.add_argument('--class', dest='cls', default='m')

    sub.add_parser('show-config', parents=[common], help="print configuration")
    return parser


def _check_naturals(args):
    for name in ('window', 'seed', 'kmax', 'k', 'ymax', 'j', 'l', 'budget',
                 'x_min', 'x_max', 'width', 'n'):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            raise UsageError(f"--{name.replace('_', '-')} must be a natural, got {value}")


def dispatch(args):
    """Run the selected command and return its Report (None for show-config)."""
    if args.command == 'show-config':
        config.print_config()
        return None

    banner(args.command.upper())
    if args.command == 'verify-chain':
        return run_verify_chain(args.set_spec, args.kmax, args.window, args.seed)
    if args.command == 'audit-pigeonhole':
        return run_audit_pigeonhole(args.generators, args.k, args.ymax, args.window, args.seed)
    if args.command == 'probe-incomparability':
        return run_probe_incomparability(
            args.set_spec, args.j, args.l, args.mode, args.generators,
            args.window, args.budget, lift=args.lift, seed=args.seed,
        )
    if args.command == 'stress-biimmunity':
        return run_stress_biimmunity(
            args.set_spec, args.x_min, args.x_max, args.width, args.generators, args.seed,
        )
    return run_oracle(args.n, args.check, args.k, args.a_mask, args.b_mask, args.cls)


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        set_quiet(args.quiet)
        _check_naturals(args)
        report = dispatch(args)
        if report is None:
            return 0
        write_report(report, args.format, args.out)
        return report.exit_code
    except DegreeKitError as e:
        err(str(e))
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
