"""
Console — progress lines on stderr.

stdout carries reports only, so everything here writes to stderr and can be
silenced with set_quiet(True) (the CLI's --quiet).
"""

import sys

import config

BLUE = "\033[94m"
GREEN = "\033[92m"
YELLOW = "\033[93m"
RED = "\033[91m"
BOLD = "\033[1m"
RESET = "\033[0m"

if not config.USE_COLOR:
    BLUE = GREEN = YELLOW = RED = BOLD = RESET = ""

_quiet = False


def set_quiet(value):
    global _quiet
    _quiet = bool(value)


def _emit(text):
    if not _quiet:
        print(text, file=sys.stderr)


def banner(title):
    _emit("=" * 70)
    _emit(f"{BOLD}{title}{RESET}")
    _emit("=" * 70)


def section(title):
    width = 60
    _emit(f"\n{BOLD}{BLUE}{'─' * width}{RESET}")
    _emit(f"{BOLD}{BLUE}  {title}{RESET}")
    _emit(f"{BOLD}{BLUE}{'─' * width}{RESET}")


def info(msg):
    _emit(f"  -> {msg}")


def ok(msg):
    _emit(f"  {GREEN}✓{RESET} {msg}")


def warn(msg):
    _emit(f"  {YELLOW}⚠{RESET} {msg}")


def err(msg):
    # errors are printed even when quiet
    print(f"  {RED}✗{RESET} {msg}", file=sys.stderr)
