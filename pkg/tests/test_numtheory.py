from math import gcd, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclocoh import numtheory as nt

small = st.integers(min_value=1, max_value=5000)


def naive_phi(n):
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@given(small)
def test_factorization_multiplies_back(n):
    f = nt.factorize(n)
    assert prod(p**e for p, e in f.factors) == n
    assert all(nt.is_prime(p) for p in f.primes)


@given(small)
def test_phi_matches_count(n):
    assert nt.euler_phi(n) == naive_phi(n)


@given(small, small)
def test_multiplicative(a, b):
    if gcd(a, b) != 1:
        return
    assert nt.euler_phi(a * b) == nt.euler_phi(a) * nt.euler_phi(b)
    assert nt.moebius(a * b) == nt.moebius(a) * nt.moebius(b)
    assert nt.tau(a * b) == nt.tau(a) * nt.tau(b)


@given(small)
def test_divisor_sums(n):
    ds = nt.divisors(n)
    assert sum(nt.euler_phi(d) for d in ds) == n
    assert sum(nt.moebius(d) for d in ds) == (1 if n == 1 else 0)
    assert len(ds) == nt.tau(n)


@given(small)
def test_tau_of_radical(n):
    assert nt.tau(nt.squarefree_part(n)) == 2 ** nt.omega(n)


def test_smallest_odd_prime():
    assert nt.smallest_odd_prime_divisor(64) is None
    assert nt.smallest_odd_prime_divisor(40) == 5
    assert nt.smallest_odd_prime_divisor(45) == 3
    with pytest.raises(ValueError):
        nt.smallest_prime_divisor(1)


@pytest.mark.parametrize("bad", [0, -3])
def test_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        nt.euler_phi(bad)


@pytest.mark.parametrize("d", [2, 4, 6, 8, 10, 12, 14, 24, 72])
def test_inverse_totient_against_scan(d):
    # every n with phi(n) = d satisfies n <= 2 d^2 (much weaker than needed, but safe)
    expected = [n for n in range(1, 2 * d * d + 1) if nt.euler_phi(n) == d]
    assert nt.inverse_totient(d) == expected


def test_inverse_totient_known():
    assert nt.inverse_totient(8) == [15, 16, 20, 24, 30]
    assert nt.inverse_totient(3) == []
    assert nt.inverse_totient(14) == []


@given(st.integers(min_value=1, max_value=3000))
@settings(max_examples=60)
def test_inverse_totient_contains_n(n):
    assert n in nt.inverse_totient(nt.euler_phi(n))


def _polymul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


@pytest.mark.parametrize("n", list(range(1, 40)) + [105, 210])
def test_cyclotomic_product(n):
    acc = [1]
    for d in nt.divisors(n):
        phi_d = nt.cyclotomic_polynomial(d)
        assert len(phi_d) - 1 == nt.euler_phi(d)
        acc = _polymul(acc, phi_d)
    assert acc == [-1] + [0] * (n - 1) + [1]


def test_cyclotomic_105_has_a_two():
    # first cyclotomic polynomial with a coefficient outside {-1, 0, 1}
    assert -2 in nt.cyclotomic_polynomial(105)
    assert nt.cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]


def test_sieves_agree_with_direct():
    N = 2000
    phi = nt.phi_sieve(N)
    ph, om, lpf = nt.arith_sieve(N)
    assert phi[0] == 0 and ph == phi
    for n in range(2, N + 1):
        assert phi[n] == nt.euler_phi(n)
        assert om[n] == nt.omega(n)
        assert lpf[n] == nt.smallest_prime_divisor(n)
    assert nt.primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_sieve_cap():
    with pytest.raises(MemoryError):
        nt.arith_sieve(100, cap=50)
