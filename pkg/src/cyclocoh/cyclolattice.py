"""Invariants of the lattice Z[zeta_n] under its trace form.

The lattice is handled through its power basis 1, zeta, ..., zeta**(d-1)
with d = phi(n). Inner products between roots of unity are exact rationals,
so coherence values, determinants and the squares of the orthogonality
defect and product measure are all computed exactly. Only the final square
roots and the packing density are floating (mpmath, configurable precision).

One representative per +/- pair of minimal vectors is zeta**k for
1 <= k <= s_half, where s_half = n for odd n and n/2 for even n.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath

from .config import default_precision
from .exact import bareiss_det, sqrt_mpf, to_mpf
from .numtheory import (
    divisors,
    euler_phi,
    factorize,
    moebius,
    omega,
    smallest_odd_prime_divisor,
)


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagreed."""


@dataclass(frozen=True)
class CycloLattice:
    n: int
    d: int
    s_half: int
    is_two_power: bool

    @classmethod
    def of(cls, n: int) -> "CycloLattice":
        _check_n(n)
        f = factorize(n)
        return cls(
            n=n,
            d=euler_phi(n),
            s_half=n if n % 2 else n // 2,
            is_two_power=f.primes == [2],
        )


@dataclass(frozen=True)
class LatticeStats:
    lattice: CycloLattice
    max_coherence: Fraction
    avg_coherence: Fraction
    discriminant: int
    det_gram: Fraction
    defect_squared: Fraction
    defect: mpmath.mpf
    packing_density: mpmath.mpf
    pi_squared: Fraction | None
    pi: mpmath.mpf | None

    def invariant_fields(self) -> dict:
        """All fields except the lattice descriptor's ``n``."""
        out = {f.name: getattr(self, f.name) for f in fields(self) if f.name != "lattice"}
        out["d"] = self.lattice.d
        out["s_half"] = self.lattice.s_half
        return out


def _check_n(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an integer, got {type(n).__name__}")
    if n <= 2:
        raise ValueError(f"cyclotomic lattices need n > 2, got {n}")


def _s_half(n: int) -> int:
    return n if n % 2 else n // 2


@lru_cache(maxsize=4096)
def _doubled_ip_table(n: int) -> tuple[int, ...]:
    """Entry r holds 2<zeta**r, 1> = phi(n) * mu(m) / phi(m), m = n / gcd(r, n).

    Always an integer because phi(m) divides phi(n) for m | n.
    """
    d = euler_phi(n)
    by_m = {}
    for m in divisors(n):
        by_m[m] = d // euler_phi(m) * moebius(m)
    return tuple(by_m[n // gcd(r, n)] for r in range(n))


def cosine(n: int, k1: int, k2: int) -> Fraction:
    """Cosine of the angle between zeta**k1 and zeta**k2, both in S'."""
    _check_n(n)
    sh = _s_half(n)
    if not (1 <= k1 <= sh and 1 <= k2 <= sh):
        raise ValueError(f"indices must lie in 1..{sh}, got {k1}, {k2}")
    if k1 == k2:
        raise ValueError("cosine needs two distinct minimal vectors")
    m = n // gcd(k1 - k2, n)
    return Fraction(moebius(m), euler_phi(m))


def inner_product(n: int, k1: int, k2: int) -> Fraction:
    """<zeta**k1, zeta**k2> = phi(n) mu(m) / (2 phi(m)); any exponents allowed."""
    _check_n(n)
    m = n // gcd(k1 - k2, n)
    return Fraction(euler_phi(n) * moebius(m), 2 * euler_phi(m))


def doubled_gram(n: int) -> list[list[int]]:
    """Twice the Gram matrix of the power basis; integral."""
    _check_n(n)
    table = _doubled_ip_table(n)
    d = euler_phi(n)
    return [[table[(i - j) % n] for j in range(d)] for i in range(d)]


def gram_matrix(n: int) -> list[list[Fraction]]:
    return [[Fraction(x, 2) for x in row] for row in doubled_gram(n)]


def max_coherence_closed(n: int) -> Fraction:
    _check_n(n)
    p = smallest_odd_prime_divisor(n)
    return Fraction(0) if p is None else Fraction(1, p - 1)


def max_coherence_bruteforce(n: int, naive: bool = False) -> Fraction:
    """Largest |cosine| over distinct pairs in S'.

    The default path reads cosines from the per-residue table; ``naive``
    evaluates every pair through :func:`cosine`.
    """
    _check_n(n)
    sh = _s_half(n)
    if naive:
        best = Fraction(0)
        for k1 in range(2, sh + 1):
            for k2 in range(1, k1):
                best = max(best, abs(cosine(n, k1, k2)))
        return best
    table = _doubled_ip_table(n)
    # pairwise differences k1 - k2 cover exactly 1..sh-1
    return Fraction(max(abs(table[r]) for r in range(1, sh)), euler_phi(n))


def _row_sums(n: int) -> list[int]:
    """phi(n) * sum_{j != k} |cos(zeta**k, zeta**j)| for every k = 1..s_half."""
    sh = _s_half(n)
    w = [abs(x) for x in _doubled_ip_table(n)]
    ext = w + w
    sums = []
    for k in range(1, sh + 1):
        # residues (k - j) mod n for j = 1..sh form one cyclic window
        start = (k - sh) % n
        sums.append(sum(ext[start : start + sh]) - w[0])
    return sums


def avg_coherence_alpha(n: int, k: int, naive: bool = False) -> Fraction:
    """Mean |cosine| between zeta**k and the other members of S'."""
    _check_n(n)
    sh = _s_half(n)
    if not 1 <= k <= sh:
        raise ValueError(f"k must lie in 1..{sh}, got {k}")
    if naive:
        total = sum((abs(cosine(n, k, j)) for j in range(1, sh + 1) if j != k), Fraction(0))
        return total / (sh - 1)
    return Fraction(_row_sums(n)[k - 1], euler_phi(n) * (sh - 1))


def avg_coherence_profile(n: int) -> list[Fraction]:
    """avg_coherence_alpha(n, k) for k = 1..s_half, in order."""
    _check_n(n)
    denom = euler_phi(n) * (_s_half(n) - 1)
    return [Fraction(s, denom) for s in _row_sums(n)]


def avg_coherence_closed(n: int) -> Fraction:
    _check_n(n)
    w = 2 ** omega(n)
    if n % 2:
        return Fraction(w - 1, n - 1)
    return Fraction(w - 2, n - 2)


def avg_coherence_bruteforce(n: int, naive: bool = False) -> Fraction:
    """Maximum of avg_coherence_alpha over every k, each row summed separately."""
    _check_n(n)
    if naive:
        return max(avg_coherence_alpha(n, k, naive=True) for k in range(1, _s_half(n) + 1))
    return max(avg_coherence_profile(n))


def discriminant(n: int) -> int:
    _check_n(n)
    d = euler_phi(n)
    num = n**d
    den = 1
    for p, _ in factorize(n):
        den *= p ** (d // (p - 1))
    mag, rem = divmod(num, den)
    if rem:
        raise InconsistencyError(f"discriminant of Q(zeta_{n}) is not an integer")
    return -mag if (d // 2) % 2 else mag


def det_gram_exact(n: int, cross_check: bool = True) -> Fraction:
    """det of the Gram matrix, 2**-d |disc|.

    With ``cross_check`` the determinant of the doubled Gram matrix is also
    computed by Bareiss elimination; it must equal |disc| exactly.
    """
    _check_n(n)
    d = euler_phi(n)
    disc = abs(discriminant(n))
    if cross_check:
        elim = bareiss_det(doubled_gram(n))
        if elim != disc:
            raise InconsistencyError(
                f"n={n}: det(2 Gram) = {elim} by elimination but |disc| = {disc}"
            )
    return Fraction(disc, 2**d)


def _defect_denominator(n: int) -> int:
    """prod_p p**(e_p d - d/(p-1)), i.e. (prod_p p**(e_p - 1/(p-1)))**d."""
    d = euler_phi(n)
    out = 1
    for p, e in factorize(n):
        out *= p ** (e * d - d // (p - 1))
    return out


def defect_squared_closed(n: int) -> Fraction:
    """nu**2 from the prime-power formula (phi(n) / prod p**(e - 1/(p-1)))**phi(n)."""
    _check_n(n)
    d = euler_phi(n)
    return Fraction(d**d, _defect_denominator(n))


def orthogonality_defect(
    n: int, prec: int | None = None, det_gram: Fraction | None = None
) -> tuple[Fraction, mpmath.mpf]:
    """(nu**2 exactly, nu at ``prec`` bits).

    nu**2 = |L|**d / det(Gram) with |L| = d/2, checked against the
    prime-power closed form.
    """
    _check_n(n)
    d = euler_phi(n)
    if det_gram is None:
        det_gram = det_gram_exact(n, cross_check=False)
    sq = Fraction(d, 2) ** d / det_gram
    closed = defect_squared_closed(n)
    if sq != closed:
        raise InconsistencyError(f"n={n}: nu^2 routes disagree ({sq} vs {closed})")
    with mpmath.workprec(prec or default_precision()):
        return sq, +sqrt_mpf(sq)


def unit_ball_volume(d: int) -> mpmath.mpf:
    """v_d from v_0 = 1, v_1 = 2, v_d = (2 pi / d) v_{d-2}, at current precision."""
    v = mpmath.mpf(1) if d % 2 == 0 else mpmath.mpf(2)
    for k in range(2 if d % 2 == 0 else 3, d + 1, 2):
        v = v * 2 * mpmath.pi / k
    return v


def packing_density(n: int, prec: int | None = None) -> mpmath.mpf:
    _check_n(n)
    d = euler_phi(n)
    prec = prec or default_precision()
    _, nu = orthogonality_defect(n, prec)
    with mpmath.workprec(prec):
        return unit_ball_volume(d) * nu / mpmath.mpf(2) ** d


def product_measure_squared_closed(n: int) -> Fraction | None:
    """Pi**2 from the closed form in n alone; None for powers of two."""
    _check_n(n)
    d = euler_phi(n)
    w = 2 ** omega(n)
    P = _defect_denominator(n)
    if n % 2:
        return Fraction(n**2 * (n - 1) ** 2 * d ** (d - 2), (w - 1) ** 2 * P)
    if w == 2:
        return None
    return Fraction(n**2 * (n - 2) ** 2 * d ** (d - 2), 4 * (w - 2) ** 2 * P)


def product_measure(
    n: int,
    prec: int | None = None,
    defect_squared: Fraction | None = None,
    avg: Fraction | None = None,
) -> tuple[Fraction, mpmath.mpf] | None:
    """(Pi**2, Pi) with Pi = s_half nu / (d A); None when A = 0."""
    _check_n(n)
    lat = CycloLattice.of(n)
    if avg is None:
        avg = avg_coherence_closed(n)
    if avg == 0:
        if product_measure_squared_closed(n) is not None:
            raise InconsistencyError(f"n={n}: A = 0 but closed-form Pi is defined")
        return None
    if defect_squared is None:
        defect_squared = defect_squared_closed(n)
    sq = Fraction(lat.s_half) ** 2 * defect_squared / (lat.d**2 * avg**2)
    closed = product_measure_squared_closed(n)
    if sq != closed:
        raise InconsistencyError(f"n={n}: Pi^2 routes disagree ({sq} vs {closed})")
    with mpmath.workprec(prec or default_precision()):
        return sq, +sqrt_mpf(sq)


def stats(n: int, prec: int | None = None, verify: bool = True, verify_max_rank: int = 100) -> LatticeStats:
    """Every invariant of the n-th cyclotomic lattice.

    With ``verify`` the closed-form coherences are compared with the
    brute-force scans, and for rank up to ``verify_max_rank`` det(Gram) is
    re-derived by elimination.
    """
    lat = CycloLattice.of(n)
    prec = prec or default_precision()
    C = max_coherence_closed(n)
    A = avg_coherence_closed(n)
    if verify:
        C_bf = max_coherence_bruteforce(n)
        A_bf = avg_coherence_bruteforce(n)
        if (C, A) != (C_bf, A_bf):
            raise InconsistencyError(
                f"n={n}: closed form (C={C}, A={A}) vs brute force (C={C_bf}, A={A_bf})"
            )
    det_g = det_gram_exact(n, cross_check=verify and lat.d <= verify_max_rank)
    nu_sq, nu = orthogonality_defect(n, prec, det_gram=det_g)
    pm = product_measure(n, prec, defect_squared=nu_sq, avg=A)
    with mpmath.workprec(prec):
        delta = unit_ball_volume(lat.d) * nu / mpmath.mpf(2) ** lat.d
    return LatticeStats(
        lattice=lat,
        max_coherence=C,
        avg_coherence=A,
        discriminant=discriminant(n),
        det_gram=det_g,
        defect_squared=nu_sq,
        defect=nu,
        packing_density=delta,
        pi_squared=None if pm is None else pm[0],
        pi=None if pm is None else pm[1],
    )

