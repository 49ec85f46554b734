"""Exact rational helpers shared across modules."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import mpmath


def bareiss_det(matrix) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination.

    Integer input stays integral throughout; rational input is first scaled
    to integers by the lcm of all denominators.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)
    if all(isinstance(x, int) for r in rows for x in r):
        scale = 1
        M = rows
    else:
        scale = lcm(*(Fraction(x).denominator for r in rows for x in r))
        M = [[int(Fraction(x) * scale) for x in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pk = M[k][k]
        rk = M[k]
        tail = rk[k + 1 :]
        for i in range(k + 1, n):
            ri = M[i]
            a = ri[k]
            if a:
                ri[k + 1 :] = [(x * pk - a * y) // prev for x, y in zip(ri[k + 1 :], tail)]
            else:
                ri[k + 1 :] = [x * pk // prev for x in ri[k + 1 :]]
        prev = pk
    return Fraction(sign * M[-1][-1], scale**n)


def to_mpf(x: Fraction) -> mpmath.mpf:
    return mpmath.mpf(x.numerator) / x.denominator


def sqrt_mpf(x: Fraction) -> mpmath.mpf:
    """Square root of a nonnegative rational at the current mpmath precision."""
    if x < 0:
        raise ValueError("square root of a negative rational")
    return mpmath.sqrt(to_mpf(x))


def decimal_digits(x: Fraction, places: int) -> str:
    """Truncated (not rounded) decimal expansion of x with ``places`` digits."""
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rem = divmod(x.numerator, x.denominator)
    if places == 0:
        return f"{sign}{whole}"
    frac = rem * 10**places // x.denominator
    return f"{sign}{whole}.{frac:0{places}d}"


def fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
