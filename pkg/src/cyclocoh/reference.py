"""Published table values and the comparison rules used against them.

Printed numbers are truncated, e.g. ``0.166...``; a trailing ellipsis means
"these leading digits", anything else is an exact decimal. ``--`` marks an
undefined entry.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources

import mpmath

from .analysis import DimensionTable
from .cyclolattice import LatticeStats
from .exact import decimal_digits

NU_PI_RTOL = 1e-3


@dataclass(frozen=True)
class PrintedValue:
    text: str

    @property
    def undefined(self) -> bool:
        return self.text.strip() == "--"

    @property
    def truncated(self) -> bool:
        return self.text.rstrip().endswith("...")

    def mantissa_exponent(self) -> tuple[str, int]:
        s = self.text.strip().replace("...", "")
        if "e" in s:
            m, e = s.split("e")
            return m.rstrip("."), int(e)
        return s.rstrip("."), 0

    def as_fraction(self) -> Fraction:
        m, e = self.mantissa_exponent()
        return Fraction(m) * Fraction(10) ** e


@dataclass(frozen=True)
class PrintedRow:
    d: int
    n: int
    C: PrintedValue
    A: PrintedValue
    nu: PrintedValue
    Pi: PrintedValue


def load_table1() -> list[PrintedRow]:
    text = resources.files("cyclocoh").joinpath("data/table1.csv").read_text("utf-8")
    rows = []
    for r in csv.DictReader(text.splitlines()):
        rows.append(
            PrintedRow(
                int(r["phi"]), int(r["n"]),
                *(PrintedValue(r[k]) for k in ("C", "A", "nu", "Pi")),
            )
        )
    return rows


def rational_matches(value: Fraction, printed: PrintedValue) -> bool:
    """Exact equality for untruncated entries, digit-prefix agreement otherwise."""
    if printed.undefined:
        return value is None
    if value is None:
        return False
    if not printed.truncated:
        return value == printed.as_fraction()
    m, e = printed.mantissa_exponent()
    if e:
        return real_matches(mpmath.mpf(value.numerator) / value.denominator, printed)
    places = len(m.split(".")[1]) if "." in m else 0
    return decimal_digits(value, places) == m


def real_matches(value, printed: PrintedValue, rtol: float = NU_PI_RTOL) -> bool:
    if printed.undefined:
        return value is None
    if value is None:
        return False
    target = printed.as_fraction()
    if target == 0:
        return value == 0
    return abs(mpmath.mpf(value) / mpmath.mpf(target.numerator) * target.denominator - 1) <= rtol


@dataclass
class RowComparison:
    n: int
    mismatches: list[str]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def compare_row(s: LatticeStats, printed: PrintedRow) -> RowComparison:
    bad = []
    if not rational_matches(s.max_coherence, printed.C):
        bad.append(f"C: computed {s.max_coherence}, printed {printed.C.text}")
    if not rational_matches(s.avg_coherence, printed.A):
        bad.append(f"A: computed {s.avg_coherence} ({float(s.avg_coherence):.6g}), printed {printed.A.text}")
    if not real_matches(s.defect, printed.nu):
        bad.append(f"nu: computed {mpmath.nstr(s.defect, 8)}, printed {printed.nu.text}")
    if not real_matches(s.pi, printed.Pi):
        got = "undefined" if s.pi is None else mpmath.nstr(s.pi, 8)
        bad.append(f"Pi: computed {got}, printed {printed.Pi.text}")
    return RowComparison(s.lattice.n, bad)


def compare_table(table: DimensionTable, printed: list[PrintedRow]) -> list[RowComparison]:
    out = []
    for row in printed:
        if row.d != table.d:
            continue
        if row.n not in table.ns:
            out.append(RowComparison(row.n, [f"n = {row.n} missing from dimension {table.d}"]))
        else:
            out.append(compare_row(table.row(row.n), row))
    return out
