"""
Report I/O — serialize a Report as JSON, CSV or Excel.
"""

import os
import sys

import pandas as pd

import config
from core.errors import UsageError
from utils.console import ok


def _write_text(text, out):
    if out == config.DEFAULT_OUT:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    folder = os.path.dirname(out)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(out, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
    ok(f"Saved: {out}")


def save_excel(df, out, sheet_name='Report'):
    """Save DataFrame to Excel with fixed column widths."""
    folder = os.path.dirname(out)
    if folder:
        os.makedirs(folder, exist_ok=True)

    with pd.ExcelWriter(out, engine='openpyxl') as writer:
        df.to_excel(writer, sheet_name=sheet_name, index=False)
        ws = writer.sheets[sheet_name]
        for col, w in config.XLSX_COLUMN_WIDTHS.items():
            ws.column_dimensions[col].width = w

    ok(f"Saved: {out} ({len(df)} rows)")


def write_report(report, fmt=config.DEFAULT_FORMAT, out=config.DEFAULT_OUT):
    """
    Args:
        report: commands.report.Report
        fmt: 'json', 'csv' or 'xlsx'
        out: File path or 'stdout'

    Raises:
        UsageError: unknown format, or xlsx to stdout
    """
    if fmt == 'json':
        _write_text(report.to_json(), out)
    elif fmt == 'csv':
        _write_text(report.to_frame().to_csv(index=False, lineterminator='\n'), out)
    elif fmt == 'xlsx':
        if out == config.DEFAULT_OUT:
            raise UsageError("xlsx output needs --out <path>")
        save_excel(report.to_frame(), out, sheet_name=report.command[:31])
    else:
        raise UsageError(f"unknown format {fmt!r} (choose from {', '.join(config.OUTPUT_FORMATS)})")
