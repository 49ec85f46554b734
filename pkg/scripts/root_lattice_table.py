"""Root lattice coherence table, brute force next to the closed forms, both defect conventions."""

import argparse
from dataclasses import dataclass

import mpmath

from cyclocoh import rootlattices as rl


@dataclass
class RootRun:
    max_rank: int = 9
    digits: int = 8


def main(cfg: RootRun) -> None:
    print(f"{'L':>4} {'|S|':>5} {'A':>8} {'A ok':>5} {'nu_table':>12} {'nu_def':>12} {'Pi_table':>12} {'printed Pi':>12}")
    for family, rank in rl.standard_systems(cfg.max_rank):
        bf = rl.bruteforce_stats(family, rank)
        cf = rl.closed_form_stats(family, rank)
        printed = cf.pi_table
        print(
            f"{bf.name:>4} {bf.s_half:>5} {str(bf.avg_coherence):>8} {str(bf.avg_coherence == cf.avg_coherence):>5}"
            f" {mpmath.nstr(bf.nu_table, cfg.digits):>12} {mpmath.nstr(bf.nu_def, cfg.digits):>12}"
            f" {mpmath.nstr(bf.pi_table, cfg.digits):>12} {mpmath.nstr(printed, cfg.digits):>12}"
        )


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-rank", type=int, default=9)
    p.add_argument("--digits", type=int, default=8)
    a = p.parse_args()
    main(RootRun(a.max_rank, a.digits))
