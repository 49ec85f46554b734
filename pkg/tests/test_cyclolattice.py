from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclocoh import cyclolattice as cl
from cyclocoh.exact import bareiss_det

ns = st.integers(min_value=3, max_value=400)


@pytest.mark.parametrize(
    "n,k1,k2,expected",
    [(7, 2, 1, Fraction(-1, 6)), (12, 4, 1, Fraction(0)), (15, 2, 1, Fraction(1, 8))],
)
def test_cosine_examples(n, k1, k2, expected):
    assert cl.cosine(n, k1, k2) == expected


@pytest.mark.parametrize(
    "n,k1,k2,expected",
    [(7, 1, 1, Fraction(3)), (4, 2, 1, Fraction(0)), (3, 2, 1, Fraction(-1, 2))],
)
def test_inner_product_examples(n, k1, k2, expected):
    assert cl.inner_product(n, k1, k2) == expected


def test_gram_examples():
    assert cl.gram_matrix(4) == [[1, 0], [0, 1]]
    assert cl.gram_matrix(3) == [[1, Fraction(-1, 2)], [Fraction(-1, 2), 1]]
    g8 = cl.gram_matrix(8)
    assert all(g8[i][j] == (2 if i == j else 0) for i in range(4) for j in range(4))


@pytest.mark.parametrize("bad", [0, 1, 2, -5])
def test_rejects_small_n(bad):
    with pytest.raises(ValueError):
        cl.CycloLattice.of(bad)


def test_rejects_non_integer():
    with pytest.raises(TypeError):
        cl.CycloLattice.of(7.0)


@pytest.mark.parametrize("n,expected", [(16, 0), (7, Fraction(1, 6)), (148, Fraction(1, 36)), (9, Fraction(1, 2)), (35, Fraction(1, 4))])
def test_max_coherence_examples(n, expected):
    assert cl.max_coherence_closed(n) == expected
    assert cl.max_coherence_bruteforce(n) == expected


@pytest.mark.parametrize(
    "n,expected",
    [(9, Fraction(1, 8)), (16, 0), (35, Fraction(3, 34)), (24, Fraction(1, 11)), (216, Fraction(1, 107)),
     (45, Fraction(3, 44)), (52, Fraction(1, 25))],
)
def test_avg_coherence_examples(n, expected):
    assert cl.avg_coherence_closed(n) == expected
    assert cl.avg_coherence_bruteforce(n) == expected


@pytest.mark.parametrize("n", range(3, 61))
def test_naive_scans_agree(n):
    # the pairwise scans are the plain definitions; the default path uses the residue table
    assert cl.max_coherence_bruteforce(n, naive=True) == cl.max_coherence_bruteforce(n)
    sh = cl.CycloLattice.of(n).s_half
    for k in (1, sh // 2 + 1, sh):
        assert cl.avg_coherence_alpha(n, k, naive=True) == cl.avg_coherence_alpha(n, k)


@pytest.mark.parametrize("n,expected", [(3, -3), (4, -4), (7, -16807)])
def test_discriminant_examples(n, expected):
    assert cl.discriminant(n) == expected


@pytest.mark.parametrize("n,expected", [(3, Fraction(3, 4)), (4, Fraction(1)), (5, Fraction(125, 16))])
def test_det_gram_examples(n, expected):
    assert cl.det_gram_exact(n) == expected
    assert bareiss_det(cl.gram_matrix(n)) == expected


def test_defect_examples():
    sq, nu = cl.orthogonality_defect(7)
    assert sq == Fraction(46656, 16807)
    assert mpmath.nstr(nu, 10).startswith("1.666")
    assert cl.orthogonality_defect(16)[0] == 1
    assert abs(cl.orthogonality_defect(15)[1] - mpmath.mpf("3.640")) < 1e-3


@pytest.mark.parametrize("n,expected", [(4, mpmath.pi / 4), (3, mpmath.pi / (2 * mpmath.sqrt(3))), (7, mpmath.mpf("0.134529"))])
def test_packing_density_examples(n, expected):
    # the n = 7 reference value is only quoted to about four significant digits
    assert abs(cl.packing_density(n) / expected - 1) < 1e-4


def test_product_measure_examples():
    assert abs(cl.product_measure(7)[1] - mpmath.mpf("11.662")) < 1e-3
    assert abs(cl.product_measure(9)[1] - mpmath.mpf("18.475")) < 1e-3
    assert cl.product_measure(16) is None


def test_stats_examples():
    s = cl.stats(45)
    assert (s.max_coherence, s.avg_coherence) == (Fraction(1, 2), Fraction(3, 44))
    assert abs(s.defect / mpmath.mpf("48.263") - 1) < 1e-4
    assert abs(s.pi / mpmath.mpf("1327.257") - 1) < 1e-6
    s = cl.stats(660, verify_max_rank=0)
    assert s.avg_coherence == Fraction(7, 329)
    assert abs(s.defect / mpmath.mpf("1.753e16") - 1) < 1e-3
    assert abs(s.pi / mpmath.mpf("1.699e18") - 1) < 1e-3
    s = cl.stats(8)
    assert (s.max_coherence, s.avg_coherence, s.defect_squared, s.pi) == (0, 0, 1, None)


@given(ns)
@settings(max_examples=80, deadline=None)
def test_closed_forms_random_n(n):
    assert cl.max_coherence_closed(n) == cl.max_coherence_bruteforce(n)
    A = cl.avg_coherence_closed(n)
    assert all(a == A for a in cl.avg_coherence_profile(n))


@given(ns)
@settings(max_examples=60, deadline=None)
def test_gram_symmetric_circulant(n):
    G = cl.doubled_gram(n)
    d = len(G)
    for i in range(d):
        assert G[i][i] == d
        for j in range(i):
            assert G[i][j] == G[j][i]
            assert abs(G[i][j]) <= d


@given(st.integers(min_value=3, max_value=120))
@settings(max_examples=40, deadline=None)
def test_defect_at_least_one(n):
    sq, _ = cl.orthogonality_defect(n)
    assert sq >= 1


@given(st.integers(min_value=1, max_value=60).map(lambda m: 2 * m + 1))
@settings(max_examples=30, deadline=None)
def test_doubling(n):
    assert cl.stats(n).invariant_fields() == cl.stats(2 * n).invariant_fields()


def test_sqfree_reduction():
    # A and C depend on n only through its radical and parity
    for n, m in [(9, 3), (25, 5), (49, 7), (45, 15)]:
        assert cl.max_coherence_closed(n) == cl.max_coherence_closed(m)
