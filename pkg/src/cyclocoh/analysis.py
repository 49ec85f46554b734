"""Per-dimension tables, extremum markers, average-order sums and export."""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

import mpmath

from .cyclolattice import (
    LatticeStats,
    avg_coherence_closed,
    max_coherence_closed,
    stats,
)
from .exact import to_mpf
from .numtheory import SIEVE_CAP, arith_sieve, inverse_totient
from .rootlattices import RootStats

MARKER_COLUMNS = ("C", "A", "nu", "Pi")


@dataclass
class DimensionTable:
    d: int
    rows: list[LatticeStats]
    # column -> every n attaining the extremum (min for C and A, max for nu and Pi)
    markers: dict[str, list[int]] = field(default_factory=dict)

    @property
    def ns(self) -> list[int]:
        return [r.lattice.n for r in self.rows]

    def row(self, n: int) -> LatticeStats:
        for r in self.rows:
            if r.lattice.n == n:
                return r
        raise KeyError(n)


def dimension_members(d: int) -> list[int]:
    """n > 2 with phi(n) = d, dropping n = 2m (m odd) since it repeats m."""
    if d < 2 or d % 2:
        raise ValueError(f"dimension must be even and at least 2, got {d}")
    ns = [n for n in inverse_totient(d) if n > 2]
    present = set(ns)
    return [n for n in ns if not (n % 4 == 2 and n // 2 in present)]


def compute_markers(rows: list[LatticeStats]) -> dict[str, list[int]]:
    keys = {
        "C": (lambda r: r.max_coherence, min),
        "A": (lambda r: r.avg_coherence, min),
        "nu": (lambda r: r.defect_squared, max),
        "Pi": (lambda r: r.pi_squared, max),
    }
    out = {}
    for col, (get, pick) in keys.items():
        vals = [(get(r), r.lattice.n) for r in rows if get(r) is not None]
        if not vals:
            out[col] = []
            continue
        best = pick(v for v, _ in vals)
        out[col] = sorted(n for v, n in vals if v == best)
    return out


def table_for_dimension(
    d: int,
    prec: int | None = None,
    verify: bool = True,
    verify_max_rank: int = 100,
    workers: int = 1,
) -> DimensionTable:
    ns = dimension_members(d)
    job = partial(stats, prec=prec, verify=verify, verify_max_rank=verify_max_rank)
    if workers > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(job, ns))
    else:
        rows = [job(n) for n in ns]
    return DimensionTable(d, rows, compute_markers(rows))


@dataclass
class AverageOrderReport:
    N: int
    sum_c: Fraction
    sum_a: Fraction
    predicted_c: float
    predicted_a: float

    @property
    def ratio_c(self) -> float:
        return _ratio(self.sum_c, self.predicted_c)

    @property
    def ratio_a(self) -> float:
        return _ratio(self.sum_a, self.predicted_a)


def _ratio(exact: Fraction, predicted: float) -> float:
    return float(exact) / predicted if predicted else math.nan


def _sum_by_denominator(terms: dict[int, int]) -> Fraction:
    """sum of num/den over a {den: num} map with a single final reduction."""
    terms = {k: v for k, v in terms.items() if v}
    if not terms:
        return Fraction(0)
    L = math.lcm(*terms)
    return Fraction(sum(v * (L // k) for k, v in terms.items()), L)


def average_order_report(N: int, cap: int = SIEVE_CAP) -> AverageOrderReport:
    """Exact sums of C_n and A_n over 3 <= n <= N next to the claimed growth rates.

    Purely diagnostic. The predicted columns are sum 2 log n / n and
    sum log 2 log n / n over the same range.
    """
    if N < 3:
        raise ValueError("N must be at least 3")
    _, om, lpf = arith_sieve(N, cap)
    c_terms: dict[int, int] = {}
    a_terms: dict[int, int] = {}
    for n in range(3, N + 1):
        m = n
        while m % 2 == 0:
            m //= 2
        if m > 1:
            p = lpf[m]
            c_terms[p - 1] = c_terms.get(p - 1, 0) + 1
        w = 1 << om[n]
        if n % 2:
            a_terms[n - 1] = a_terms.get(n - 1, 0) + w - 1
        else:
            a_terms[n - 2] = a_terms.get(n - 2, 0) + w - 2
    logs = [math.log(n) / n for n in range(3, N + 1)]
    base = math.fsum(logs)
    return AverageOrderReport(
        N=N,
        sum_c=_sum_by_denominator(c_terms),
        sum_a=_sum_by_denominator(a_terms),
        predicted_c=2 * base,
        predicted_a=math.log(2) * base,
    )


def naive_average_sums(N: int) -> tuple[Fraction, Fraction]:
    """Term-by-term Fraction sums of C_n and A_n from the per-n closed forms."""
    sc = Fraction(0)
    sa = Fraction(0)
    for n in range(3, N + 1):
        sc += max_coherence_closed(n)
        sa += avg_coherence_closed(n)
    return sc, sa


# ---------------------------------------------------------------- export

FORMATS = ("csv", "json")


def _rat(x: Fraction | None) -> dict | None:
    if x is None:
        return None
    return {"num": str(x.numerator), "den": str(x.denominator), "float": float(x)}


def _mp(x) -> mpmath.mpf:
    return to_mpf(x) if isinstance(x, Fraction) else mpmath.mpf(x)


def _num(x, digits: int) -> float | None:
    if x is None:
        return None
    return float(mpmath.nstr(_mp(x), digits))


def _rat_str(x: Fraction | None) -> str:
    if x is None:
        return ""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _fmt(x, digits: int) -> str:
    if x is None:
        return ""
    return mpmath.nstr(_mp(x), digits)


def stats_record(s: LatticeStats, digits: int = 15) -> dict:
    return {
        "n": s.lattice.n,
        "phi": s.lattice.d,
        "sHalf": s.lattice.s_half,
        "C": _rat(s.max_coherence),
        "A": _rat(s.avg_coherence),
        "nu": _num(s.defect, digits),
        "nuSquared": _rat(s.defect_squared),
        "Pi": _num(s.pi, digits),
        "PiSquared": _rat(s.pi_squared),
        "packingDensity": _num(s.packing_density, digits),
        "discriminant": str(s.discriminant),
        "detGram": _rat(s.det_gram),
    }


TABLE_COLUMNS = ["n", "phi", "sHalf", "C", "A", "nu", "Pi", "C_float", "A_float", "nu_squared", "Pi_squared"]


def _stats_csv_row(s: LatticeStats, digits: int) -> list[str]:
    return [
        str(s.lattice.n),
        str(s.lattice.d),
        str(s.lattice.s_half),
        _rat_str(s.max_coherence),
        _rat_str(s.avg_coherence),
        _fmt(s.defect, digits),
        _fmt(s.pi, digits),
        _fmt(s.max_coherence, digits),
        _fmt(s.avg_coherence, digits),
        _rat_str(s.defect_squared),
        _rat_str(s.pi_squared),
    ]


ROOT_COLUMNS = ["lattice", "rank", "sHalf", "C", "A", "nu_def", "nu_table", "Pi_def", "Pi_table"]


def root_record(r: RootStats, digits: int = 15) -> dict:
    return {
        "lattice": r.name,
        "rank": r.rank,
        "sHalf": r.s_half,
        "C": _rat(r.coherence),
        "A": _rat(r.avg_coherence),
        "nuDef": _num(r.nu_def, digits),
        "nuTable": _num(r.nu_table, digits),
        "nuDefSquared": _rat(r.nu_def_squared),
        "nuTableSquared": _rat(r.nu_table_squared),
        "PiDef": _num(r.pi_def, digits),
        "PiTable": _num(r.pi_table, digits),
    }


def report_record(rep: AverageOrderReport, digits: int = 15) -> dict:
    return {
        "N": rep.N,
        "sumC": _rat(rep.sum_c),
        "sumA": _rat(rep.sum_a),
        "predictedC": rep.predicted_c,
        "predictedA": rep.predicted_a,
        "ratioC": rep.ratio_c,
        "ratioA": rep.ratio_a,
    }


def export(obj, fmt: str, digits: int = 15) -> bytes:
    """Serialize a table, a single stats bundle, root-lattice rows or an average-order report."""
    fmt = fmt.lower()
    # exact sums over large ranges have denominators with tens of thousands of digits
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {', '.join(FORMATS)}")
    if fmt == "json":
        return (json.dumps(_json_payload(obj, digits), indent=2) + "\n").encode("utf-8")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(obj, DimensionTable):
        w.writerow(TABLE_COLUMNS)
        for s in obj.rows:
            w.writerow(_stats_csv_row(s, digits))
    elif isinstance(obj, LatticeStats):
        w.writerow(TABLE_COLUMNS)
        w.writerow(_stats_csv_row(obj, digits))
    elif isinstance(obj, AverageOrderReport):
        w.writerow(["N", "sumC", "sumA", "sumC_float", "sumA_float", "predictedC", "predictedA", "ratioC", "ratioA"])
        w.writerow([
            obj.N, _rat_str(obj.sum_c), _rat_str(obj.sum_a),
            _fmt(obj.sum_c, digits), _fmt(obj.sum_a, digits),
            _fmt(obj.predicted_c, digits), _fmt(obj.predicted_a, digits),
            _fmt(obj.ratio_c, digits), _fmt(obj.ratio_a, digits),
        ])
    elif _is_root_rows(obj):
        w.writerow(ROOT_COLUMNS)
        for r in obj:
            w.writerow([
                r.name, r.rank, r.s_half, _rat_str(r.coherence), _rat_str(r.avg_coherence),
                _fmt(r.nu_def, digits), _fmt(r.nu_table, digits),
                _fmt(r.pi_def, digits), _fmt(r.pi_table, digits),
            ])
    else:
        raise TypeError(f"cannot export {type(obj).__name__}")
    return buf.getvalue().encode("utf-8")


def _is_root_rows(obj) -> bool:
    return isinstance(obj, (list, tuple)) and all(isinstance(r, RootStats) for r in obj)


def _json_payload(obj, digits: int):
    if isinstance(obj, DimensionTable):
        return {
            "dimension": obj.d,
            "rows": [stats_record(s, digits) for s in obj.rows],
            "markers": obj.markers,
        }
    if isinstance(obj, LatticeStats):
        return stats_record(obj, digits)
    if isinstance(obj, AverageOrderReport):
        return report_record(obj, digits)
    if _is_root_rows(obj):
        return {"rows": [root_record(r, digits) for r in obj]}
    raise TypeError(f"cannot export {type(obj).__name__}")


def parse_rational(value) -> Fraction | None:
    """Inverse of the export encodings: {"num", "den"} objects or "p/q" strings."""
    if value is None or value == "":
        return None
    if isinstance(value, dict):
        return Fraction(int(value["num"]), int(value["den"]))
    return Fraction(value)


def parse_table(data: bytes, fmt: str) -> list[dict]:
    """Rows of an exported dimension table with rational fields as Fractions."""
    text = data.decode("utf-8")
    if fmt == "json":
        rows = json.loads(text)["rows"]
        return [
            {
                "n": r["n"],
                "C": parse_rational(r["C"]),
                "A": parse_rational(r["A"]),
                "nu_squared": parse_rational(r["nuSquared"]),
                "Pi_squared": parse_rational(r["PiSquared"]),
            }
            for r in rows
        ]
    if fmt == "csv":
        return [
            {
                "n": int(r["n"]),
                "C": parse_rational(r["C"]),
                "A": parse_rational(r["A"]),
                "nu_squared": parse_rational(r["nu_squared"]),
                "Pi_squared": parse_rational(r["Pi_squared"]),
            }
            for r in csv.DictReader(io.StringIO(text))
        ]
    raise ValueError(f"unknown format {fmt!r}")
