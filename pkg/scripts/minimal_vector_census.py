"""Enumerate minimal vectors of Z[zeta_n] for a range of n and report search sizes."""

import argparse
import time
from dataclasses import dataclass

from cyclocoh import oracle
from cyclocoh.numtheory import euler_phi


@dataclass
class CensusRun:
    lo: int = 3
    hi: int = 36
    budget: int = 10**8


def main(cfg: CensusRun) -> int:
    bad = 0
    for n in range(cfg.lo, cfg.hi + 1):
        t0 = time.perf_counter()
        res = oracle.verify_minimal_vectors(n, cfg.budget)
        bad += not res.ok
        print(
            f"n={n:>3} rank={euler_phi(n):>3} {res.status:>8} count={res.count:>4}"
            f" nodes={res.nodes:>8} {time.perf_counter() - t0:.2f}s {res.detail}"
        )
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--lo", type=int, default=3)
    p.add_argument("--hi", type=int, default=36)
    p.add_argument("--budget", type=int, default=10**8)
    a = p.parse_args()
    raise SystemExit(main(CensusRun(a.lo, a.hi, a.budget)))
