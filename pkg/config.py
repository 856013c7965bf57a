"""
Configuration — All limits, defaults and output settings in one place.

CLI flags override these per run (see main.py); nothing here is mutated
at runtime.
"""

import sys

# =============================================================================
# NATURALS
# =============================================================================
# Every natural handled by the library is a 64-bit unsigned value. Anything
# larger signals a CapacityError instead of wrapping.
MAX_NATURAL = 2**64 - 1

# =============================================================================
# WINDOWS, SEEDS, BUDGETS
# =============================================================================
DEFAULT_WINDOW = 10_000
DEFAULT_SEED = 0
DEFAULT_BUDGET = 1_000

# Column width used by stress-biimmunity when --width is not given
DEFAULT_COLUMN_WIDTH = 100

# =============================================================================
# RANK / SELECT TABLES
# =============================================================================
# Diagonals of the pairing grid added per block when a rank table grows.
RANK_BLOCK_DIAGONALS = 256

# =============================================================================
# FINITE ORACLE CAPS
# =============================================================================
ORACLE_MAX_N = 4            # compose (n^n * n^n pairs) and reduces
PIGEONHOLE_MAX_N = 6        # maps from k+1 points into k slots, k+1 <= n
DEGREE_PARTITION_MAX_N = 3  # all-subset degree partitions

# =============================================================================
# REPORTS
# =============================================================================
REPORT_SCHEMA_VERSION = 1
DEFAULT_OUT = "stdout"
DEFAULT_FORMAT = "json"
OUTPUT_FORMATS = ("json", "csv", "xlsx")

# Excel column widths for xlsx reports
XLSX_COLUMN_WIDTHS = {'A': 28, 'B': 18, 'C': 12, 'D': 10, 'E': 70}

# =============================================================================
# CONSOLE
# =============================================================================
USE_COLOR = sys.stderr.isatty()


# =============================================================================
# DEBUG
# =============================================================================

def print_config(stream=None):
    """Print current configuration."""
    stream = stream or sys.stderr
    print("=" * 70, file=stream)
    print("CONFIGURATION", file=stream)
    print("=" * 70, file=stream)
    print(f"  Max natural        : {MAX_NATURAL}", file=stream)
    print(f"  Default window     : {DEFAULT_WINDOW}", file=stream)
    print(f"  Default seed       : {DEFAULT_SEED}", file=stream)
    print(f"  Default budget     : {DEFAULT_BUDGET}", file=stream)
    print(f"  Rank block         : {RANK_BLOCK_DIAGONALS} diagonals", file=stream)
    print(f"  Oracle caps        : compose/reduces n<={ORACLE_MAX_N}, "
          f"pigeonhole n<={PIGEONHOLE_MAX_N}, degrees n<={DEGREE_PARTITION_MAX_N}", file=stream)
    print(f"  Report schema      : {REPORT_SCHEMA_VERSION}", file=stream)
    print(f"  Output             : {DEFAULT_OUT} ({DEFAULT_FORMAT})", file=stream)
    print("=" * 70, file=stream)


if __name__ == '__main__':
    print_config(sys.stdout)
