"""Partial sums of C_n and A_n against the claimed average orders, at several cut-offs.

N = 10**6 works but takes a few minutes because of the exact lcm.
"""

import argparse
import time
from dataclasses import dataclass, field

from cyclocoh import analysis


@dataclass
class SweepRun:
    cutoffs: list[int] = field(default_factory=lambda: [10**3, 10**4, 10**5])


def main(cfg: SweepRun) -> None:
    print(f"{'N':>9} {'sum C':>14} {'pred C':>12} {'ratio C':>9} {'sum A':>10} {'pred A':>10} {'ratio A':>9} {'secs':>6}")
    for N in cfg.cutoffs:
        t0 = time.perf_counter()
        rep = analysis.average_order_report(N)
        dt = time.perf_counter() - t0
        print(
            f"{N:>9} {float(rep.sum_c):>14.4f} {rep.predicted_c:>12.4f} {rep.ratio_c:>9.4f}"
            f" {float(rep.sum_a):>10.4f} {rep.predicted_a:>10.4f} {rep.ratio_a:>9.4f} {dt:>6.2f}"
        )


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--cutoffs", type=int, nargs="+", default=SweepRun().cutoffs)
    main(SweepRun(p.parse_args().cutoffs))
