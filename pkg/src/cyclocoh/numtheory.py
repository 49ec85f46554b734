"""Exact multiplicative number theory on small positive integers.

Everything here is pure integer arithmetic: factorization by trial division,
the classical multiplicative functions, inverse totient enumeration and
cyclotomic polynomials with arbitrary-size coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

# Upper bound on the table size accepted by ``phi_sieve`` and ``arith_sieve``.
SIEVE_CAP = 10**7


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"malformed factorization {self.factors}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factors multiply to {prod}, not {self.n}")

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def _check_positive(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an integer, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division with a 2,3,5 wheel."""
    _check_positive(n)
    factors = []
    m = n
    for p in (2, 3, 5):
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    # offsets from 7 covering residues coprime to 30
    steps = (4, 2, 4, 2, 4, 6, 2, 6)
    p = 7
    i = 0
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += steps[i]
        i = (i + 1) % 8
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def omega(n: int) -> int:
    """Number of distinct prime divisors."""
    return len(factorize(n))


def tau(n: int) -> int:
    """Number of positive divisors."""
    result = 1
    for _, e in factorize(n):
        result *= e + 1
    return result


def squarefree_part(n: int) -> int:
    """Radical of n: the product of its distinct primes."""
    result = 1
    for p in factorize(n).primes:
        result *= p
    return result


def smallest_odd_prime_divisor(n: int) -> int | None:
    """Least odd prime dividing n, or None when n is a power of two."""
    for p in factorize(n).primes:
        if p != 2:
            return p
    return None


def smallest_prime_divisor(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"smallest_prime_divisor needs n >= 2, got {n}")
    return factorize(n).factors[0][0]


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n).factors == ((n, 1),)


def inverse_totient(d: int) -> list[int]:
    """All n with euler_phi(n) == d, ascending.

    Depth-first search over prime powers p**k with (p - 1) * p**(k-1)
    dividing the remaining cofactor. Primes are taken in descending order so
    each n is produced once.
    """
    _check_positive(d)
    primes = sorted((q + 1 for q in divisors(d) if is_prime(q + 1)), reverse=True)
    found = set()

    def search(rem: int, start: int, acc: int) -> None:
        if rem == 1:
            found.add(acc)
        for i in range(start, len(primes)):
            p = primes[i]
            if rem % (p - 1):
                continue
            r = rem // (p - 1)
            pk = p
            while True:
                search(r, i + 1, acc * pk)
                if r % p:
                    break
                r //= p
                pk *= p

    search(d, 0, 1)
    return sorted(found)


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (ascending coefficients); den monic."""
    num = list(num)
    dn = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    q = [0] * (len(num) - dn)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + dn]
        q[i] = c
        if c:
            for j in range(dn + 1):
                num[i + j] -= c * den[j]
    if any(num[:dn]):
        raise ArithmeticError("polynomial division left a remainder")
    return q


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    poly = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        poly = _poly_divexact(poly, list(_cyclotomic(d)))
    return tuple(poly)


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed by dividing x**n - 1 by every cyclotomic factor of a proper
    divisor of n. Results are memoized.
    """
    _check_positive(n)
    return list(_cyclotomic(n))


def phi_sieve(N: int, cap: int = SIEVE_CAP) -> list[int]:
    """Totients of 0..N as a list (index 0 holds 0), linear sieve."""
    phi, _, _ = arith_sieve(N, cap)
    return phi


def arith_sieve(N: int, cap: int = SIEVE_CAP) -> tuple[list[int], list[int], list[int]]:
    """Linear sieve returning (phi, omega, least prime factor) tables for 0..N."""
    _check_positive(N)
    if N > cap:
        raise MemoryError(f"sieve size {N} exceeds cap {cap}")
    phi = [0] * (N + 1)
    om = [0] * (N + 1)
    lpf = [0] * (N + 1)
    phi[1] = 1
    primes: list[int] = []
    for i in range(2, N + 1):
        if lpf[i] == 0:
            lpf[i] = i
            phi[i] = i - 1
            om[i] = 1
            primes.append(i)
        li = lpf[i]
        for p in primes:
            ip = i * p
            if p > li or ip > N:
                break
            lpf[ip] = p
            if p == li:
                phi[ip] = phi[i] * p
                om[ip] = om[i]
            else:
                phi[ip] = phi[i] * (p - 1)
                om[ip] = om[i] + 1
    return phi, om, lpf


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, n + 1, p)))
    return [i for i, v in enumerate(sieve) if v]
