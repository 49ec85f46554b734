"""Run every available cross-check for one cyclotomic lattice."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import cyclolattice as cl
from . import oracle
from .config import Config

# enumeration beyond this rank is out of reach for the exact oracle
ENUM_MAX_RANK = 40
# numeric Gram comparison is skipped above this n unless forced
NUMERIC_MAX_N = 100


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    skipped: bool = False


@dataclass
class Verification:
    n: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.skipped)

    def add(self, name: str, passed: bool, detail: str = "", skipped: bool = False) -> None:
        self.checks.append(Check(name, passed, detail, skipped))


def verify_n(
    n: int,
    config: Config | None = None,
    enumerate_vectors: bool = False,
    numeric_max_n: int = NUMERIC_MAX_N,
    det_max_rank: int | None = None,
) -> Verification:
    cfg = config or Config()
    det_max_rank = cfg.verify_max_rank if det_max_rank is None else det_max_rank
    out = Verification(n)
    lat = cl.CycloLattice.of(n)

    C, C_bf = cl.max_coherence_closed(n), cl.max_coherence_bruteforce(n)
    out.add("max coherence closed = brute force", C == C_bf, f"{C} vs {C_bf}")
    A = cl.avg_coherence_closed(n)
    profile = cl.avg_coherence_profile(n)
    A_bf = max(profile)
    out.add("avg coherence closed = brute force", A == A_bf, f"{A} vs {A_bf}")
    bad = [k for k, a in enumerate(profile, 1) if a != A]
    out.add("A(alpha) independent of alpha", not bad, f"differs at k={bad[:5]}" if bad else "")

    try:
        cl.det_gram_exact(n, cross_check=lat.d <= det_max_rank)
        out.add("det(Gram) = 2^-d |disc|", True, skipped=lat.d > det_max_rank,
                detail="" if lat.d <= det_max_rank else f"rank {lat.d} above {det_max_rank}")
        cl.orthogonality_defect(n, cfg.precision_bits)
        out.add("nu^2 routes agree", True)
        cl.product_measure(n, cfg.precision_bits)
        out.add("Pi^2 routes agree", True)
    except cl.InconsistencyError as exc:
        out.add("exact identities", False, str(exc))

    if n <= numeric_max_n:
        dev, ok = oracle.numeric_gram_check(n, cfg.precision_bits, cfg.tolerance)
        out.add("embedded Gram = exact Gram", ok, f"max deviation {dev:.3g}")
    else:
        out.add("embedded Gram = exact Gram", True, f"n above {numeric_max_n}", skipped=True)

    if enumerate_vectors:
        if lat.d > ENUM_MAX_RANK:
            out.add("minimal vectors = roots of unity", True, f"rank {lat.d} above {ENUM_MAX_RANK}", skipped=True)
        else:
            mv = oracle.verify_minimal_vectors(n, cfg.enum_node_budget)
            if mv.status == "budget":
                out.add("minimal vectors = roots of unity", False, "node budget exhausted")
            else:
                out.add(
                    "minimal vectors = roots of unity",
                    mv.ok,
                    f"count {mv.count}, doubled minimum {mv.min_norm_doubled}" + (f"; {mv.detail}" if mv.detail else ""),
                )
    return out
