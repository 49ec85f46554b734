"""Root systems of A_n, D_n, E6, E7, E8 and their coherence statistics.

Coordinates are doubled so that the half-integral E8 roots become odd
integers; every root then has doubled squared norm 8 and every inner
product is an exact integer (divide by 4 for the true value).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

import mpmath

from .exact import bareiss_det, sqrt_mpf

MAX_ROOTS = 20000

FAMILIES = ("A", "D", "E")


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    vectors_doubled: tuple[tuple[int, ...], ...]
    ambient_dim: int

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def __len__(self):
        return len(self.vectors_doubled)


@dataclass(frozen=True)
class RootStats:
    """Coherence data for one root lattice.

    Squares of nu and Pi are kept exact. ``nu_table`` uses det(Gram) in the
    denominator, ``nu_def`` uses det(L) = sqrt(det(Gram)). ``pi_printed``
    carries a published value that has no exact counterpart.
    """

    name: str
    rank: int
    s_half: int
    coherence: Fraction
    avg_coherence: Fraction
    nu_table_squared: Fraction
    pi_table_squared: Fraction | None
    nu_def_squared: Fraction | None = None
    pi_def_squared: Fraction | None = None
    pi_printed: float | None = None

    @property
    def nu_table(self) -> mpmath.mpf:
        return sqrt_mpf(self.nu_table_squared)

    @property
    def nu_def(self) -> mpmath.mpf | None:
        return None if self.nu_def_squared is None else sqrt_mpf(self.nu_def_squared)

    @property
    def pi_table(self) -> mpmath.mpf | None:
        if self.pi_table_squared is None:
            return None if self.pi_printed is None else mpmath.mpf(self.pi_printed)
        return sqrt_mpf(self.pi_table_squared)

    @property
    def pi_def(self) -> mpmath.mpf | None:
        return None if self.pi_def_squared is None else sqrt_mpf(self.pi_def_squared)


def _normalize(family: str, rank: int | None) -> tuple[str, int]:
    family = family.upper()
    if len(family) > 1 and family[0] == "E" and family[1:].isdigit():
        r = int(family[1:])
        if rank is not None and rank != r:
            raise ValueError(f"{family} conflicts with rank {rank}")
        family, rank = "E", r
    if family not in FAMILIES:
        raise ValueError(f"unknown root lattice family {family!r}")
    if rank is None:
        raise ValueError("rank is required")
    if family == "A" and rank < 1:
        raise ValueError("A_n needs n >= 1")
    if family == "D" and rank < 4:
        raise ValueError("D_n needs n >= 4")
    if family == "E" and rank not in (6, 7, 8):
        raise ValueError("E_n exists only for n = 6, 7, 8")
    return family, rank


def _unit(dim: int, i: int, scale: int = 2) -> list[int]:
    v = [0] * dim
    v[i] = scale
    return v


def _all_e8_roots() -> list[tuple[int, ...]]:
    roots = []
    for i, j in combinations(range(8), 2):
        for si, sj in product((2, -2), repeat=2):
            v = [0] * 8
            v[i], v[j] = si, sj
            roots.append(tuple(v))
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(signs)
    return roots


def _one_per_pair(vectors) -> list[tuple[int, ...]]:
    # keep the member of each +/- pair whose first nonzero coordinate is positive
    return [v for v in vectors if next(x for x in v if x) > 0]


def generate(family: str, rank: int | None = None) -> RootSystem:
    family, rank = _normalize(family, rank)
    if family == "A":
        dim = rank + 1
        vecs = []
        for i, j in combinations(range(dim), 2):
            v = [0] * dim
            v[i], v[j] = 2, -2
            vecs.append(tuple(v))
    elif family == "D":
        dim = rank
        vecs = []
        for i, j in combinations(range(dim), 2):
            for sj in (-2, 2):
                v = [0] * dim
                v[i], v[j] = 2, sj
                vecs.append(tuple(v))
    else:
        dim = 8
        roots = _all_e8_roots()
        if rank <= 7:
            roots = [v for v in roots if v[6] + v[7] == 0]
        if rank == 6:
            roots = [v for v in roots if v[5] + v[7] == 0]
        vecs = _one_per_pair(roots)
    if len(vecs) > MAX_ROOTS:
        raise ValueError(f"{family}{rank} has {len(vecs)} roots, above the limit {MAX_ROOTS}")
    return RootSystem(family, rank, tuple(sorted(vecs, reverse=True)), dim)


def simple_roots(family: str, rank: int | None = None) -> list[tuple[int, ...]]:
    """A basis of simple roots, doubled coordinates, in the same ambient space as generate()."""
    family, rank = _normalize(family, rank)
    if family == "A":
        dim = rank + 1
        return [tuple(a - b for a, b in zip(_unit(dim, i), _unit(dim, i + 1))) for i in range(rank)]
    if family == "D":
        dim = rank
        out = [tuple(a - b for a, b in zip(_unit(dim, i), _unit(dim, i + 1))) for i in range(rank - 1)]
        out.append(tuple(a + b for a, b in zip(_unit(dim, rank - 2), _unit(dim, rank - 1))))
        return out
    # Bourbaki simple roots of E8; the first 7 (6) span E7 (E6)
    e8 = [(1, -1, -1, -1, -1, -1, -1, 1), (2, 2, 0, 0, 0, 0, 0, 0)]
    for i in range(6):
        e8.append(tuple(a - b for a, b in zip(_unit(8, i + 1), _unit(8, i))))
    return e8[:rank]


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def gram_det(family: str, rank: int | None = None) -> Fraction:
    """det of the Gram matrix of a simple-root basis, i.e. det(L)**2."""
    basis = simple_roots(family, rank)
    return bareiss_det([[Fraction(_dot(u, v), 4) for v in basis] for u in basis])


def neighbour_counts(system: RootSystem) -> list[int]:
    """For each root, how many other representatives it is not orthogonal to."""
    vecs = system.vectors_doubled
    return [sum(1 for j, y in enumerate(vecs) if j != i and _dot(x, y)) for i, x in enumerate(vecs)]


def bruteforce_stats(family: str, rank: int | None = None) -> RootStats:
    """Pairwise scan of the generated roots; nu from an exact simple-root Gram."""
    system = generate(family, rank)
    vecs = system.vectors_doubled
    s_half = len(vecs)
    r = system.rank
    norm = 8  # doubled squared norm of every root
    best = 0
    best_row = 0
    for i, x in enumerate(vecs):
        if _dot(x, x) != norm:
            raise ArithmeticError(f"{system.name}: root {x} has wrong length")
        row = 0
        for j, y in enumerate(vecs):
            if j != i:
                ip = abs(_dot(x, y))
                row += ip
                if ip > best:
                    best = ip
        best_row = max(best_row, row)
    C = Fraction(best, norm)
    A = Fraction(best_row, norm * (s_half - 1))
    det_g = gram_det(system.family, r)
    nu_table_sq = Fraction(2) ** r / det_g**2
    nu_def_sq = Fraction(2) ** r / det_g
    return RootStats(
        name=system.name,
        rank=r,
        s_half=s_half,
        coherence=C,
        avg_coherence=A,
        nu_table_squared=nu_table_sq,
        pi_table_squared=_pi_squared(s_half, nu_table_sq, r, A),
        nu_def_squared=nu_def_sq,
        pi_def_squared=_pi_squared(s_half, nu_def_sq, r, A),
    )


def _pi_squared(s_half: int, nu_sq: Fraction, rank: int, avg: Fraction) -> Fraction | None:
    if avg == 0:
        return None
    return Fraction(s_half) ** 2 * nu_sq / (rank**2 * avg**2)


# published E7 product measure; it does not follow from the E7 row itself
E7_PRINTED_PI = 13.138


def closed_form_stats(family: str, rank: int | None = None) -> RootStats:
    """The published table entries, with nu and Pi as exact squares."""
    family, n = _normalize(family, rank)
    half = Fraction(1, 2)
    if family == "A":
        return RootStats(
            f"A{n}", n, n * (n + 1) // 2, half, Fraction(2, n + 2),
            nu_table_squared=Fraction(2) ** n / (n + 1) ** 2,
            pi_table_squared=(n + 2) ** 2 * Fraction(2) ** (n - 4),
        )
    if family == "D":
        return RootStats(
            f"D{n}", n, n * (n - 1), half, Fraction(2 * (n - 2), n * n - n - 1),
            nu_table_squared=Fraction(2) ** (n - 4),
            pi_table_squared=Fraction((n - 1) * (n * n - n - 1), n - 2) ** 2 * Fraction(2) ** (n - 6),
        )
    if n == 6:
        return RootStats("E6", 6, 36, half, Fraction(2, 7), Fraction(64, 9), Fraction(56) ** 2)
    if n == 7:
        return RootStats(
            "E7", 7, 63, half, Fraction(8, 31), Fraction(32), None, pi_printed=E7_PRINTED_PI
        )
    return RootStats("E8", 8, 120, half, Fraction(28, 119), Fraction(256), Fraction(1020) ** 2)


def standard_systems(max_rank: int = 9) -> list[tuple[str, int]]:
    """(family, rank) pairs for A_2..A_max, D_4..D_max, E6, E7, E8."""
    out = [("A", n) for n in range(2, max_rank + 1)]
    out += [("D", n) for n in range(4, max_rank + 1)]
    out += [("E", 6), ("E", 7), ("E", 8)]
    return out
