from __future__ import annotations

import os
from dataclasses import dataclass

PRECISION_ENV = "CYCLOCOH_PRECISION"


def default_precision() -> int:
    return int(os.environ.get(PRECISION_ENV, "256"))


@dataclass
class Config:
    """Run-wide knobs shared by the CLI and the scripts."""

    precision_bits: int = 256
    tolerance: float = 1e-9
    enum_node_budget: int = 10**8
    workers: int = 1
    output_format: str = "text"
    # largest rank for which stats() re-derives det(Gram) by elimination
    verify_max_rank: int = 100

    def __post_init__(self):
        if self.precision_bits < 53:
            raise ValueError("precision_bits must be at least 53")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.enum_node_budget < 1:
            raise ValueError("enum_node_budget must be positive")
        if self.output_format not in ("text", "csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
