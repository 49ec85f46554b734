"""Coherence and orthogonality invariants of cyclotomic and root lattices."""

from .cyclolattice import CycloLattice, LatticeStats, stats

__version__ = "0.1.0"
