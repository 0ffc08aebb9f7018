"""Presentation helpers: exact values in, deterministic text out."""

from __future__ import annotations

import csv
import io
from fractions import Fraction


def fraction_str(value: Fraction) -> str:
    """Canonical ``num/den`` form, denominator kept even when it is 1."""
    return f"{value.numerator}/{value.denominator}"


def format_fraction(value: Fraction, digits: int) -> str:
    """Fixed-point decimal with ``digits`` places, round-half-even."""
    sign = "-" if value < 0 else ""
    value = abs(value)
    scaled, remainder = divmod(value.numerator * 10**digits, value.denominator)
    if 2 * remainder > value.denominator or (
        2 * remainder == value.denominator and scaled % 2 == 1
    ):
        scaled += 1
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}" if digits else f"{sign}{scaled}"


def render_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [
        max(len(header[i]), *(len(r[i]) for r in rows)) if rows else len(header[i])
        for i in range(len(header))
    ]
    lines = []
    for row in [header] + rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()
