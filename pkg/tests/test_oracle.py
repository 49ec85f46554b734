from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclocoh import cyclolattice as cl
from cyclocoh import oracle


def test_basis_examples():
    b = oracle.minkowski_basis(4, 128).as_array()
    assert np.allclose(b, [[1, 0], [0, 1]])
    b = oracle.minkowski_basis(3, 128).as_array()
    assert np.allclose(b, [[1, -0.5], [0, np.sqrt(3) / 2]])
    b = oracle.minkowski_basis(5, 128).as_array()
    assert b.shape == (4, 4)
    assert np.allclose((b**2).sum(axis=0), 2)


@pytest.mark.parametrize("n,prec", [(12, 256), (3, 53)])
def test_numeric_gram(n, prec):
    dev, ok = oracle.numeric_gram_check(n, prec, 1e-9)
    assert ok and dev < 1e-12


def test_numeric_gram_rejects_small():
    with pytest.raises(ValueError):
        oracle.numeric_gram_check(2)


@pytest.mark.parametrize(
    "n,k,expected",
    [(7, 2, [0, 0, 1, 0, 0, 0]), (5, 4, [-1, -1, -1, -1]), (4, 3, [0, -1])],
)
def test_root_of_unity_coords(n, k, expected):
    assert oracle.root_of_unity_coords(n, k) == expected


@pytest.mark.parametrize("n,minimum,count", [(5, 4, 10), (7, 6, 14), (8, 4, 8)])
def test_short_vectors(n, minimum, count):
    rep = oracle.short_vectors(n)
    assert (rep.min_norm_doubled, rep.count) == (minimum, count)
    if n == 8:
        units = {tuple(s * (i == j) for j in range(4)) for i in range(4) for s in (1, -1)}
        assert set(rep.vectors) == units


@pytest.mark.parametrize("n,count", [(7, 14), (12, 12), (9, 18)])
def test_verify_minimal_vectors(n, count):
    res = oracle.verify_minimal_vectors(n)
    assert res.ok and res.count == count


def test_budget_reported():
    res = oracle.verify_minimal_vectors(35, node_budget=10)
    assert res.status == "budget" and not res.ok


def test_enumeration_against_box_scan():
    # every coefficient vector in a small box, norms from the exact Gram
    from itertools import product

    G = cl.doubled_gram(5)
    best = {}
    for v in product(range(-2, 3), repeat=4):
        if any(v):
            q = sum(G[i][j] * v[i] * v[j] for i in range(4) for j in range(4))
            best.setdefault(q, []).append(v)
    m = min(best)
    rep = oracle.short_vectors(5)
    assert rep.min_norm_doubled == m
    assert sorted(best[m]) == rep.vectors


def test_set_coherence_examples():
    I3 = np.eye(3)
    assert oracle.set_coherence(I3) == 0 and oracle.set_avg_coherence(I3) == 0
    tri = [[np.cos(t), np.sin(t)] for t in (0, 2 * np.pi / 3, 4 * np.pi / 3)]
    assert abs(oracle.set_coherence(tri) - 0.5) < 1e-12
    assert abs(oracle.set_avg_coherence(tri) - 0.5) < 1e-12
    vecs = oracle.embedded_minimal_vectors(7)
    assert abs(oracle.set_coherence(vecs) - 1 / 6) < 1e-9


@given(st.integers(min_value=3, max_value=60))
@settings(max_examples=25, deadline=None)
def test_embedded_coherence_matches_exact(n):
    vecs = oracle.embedded_minimal_vectors(n, 64)
    assert abs(oracle.set_coherence(vecs) - float(cl.max_coherence_closed(n))) < 1e-9
    assert abs(oracle.set_avg_coherence(vecs) - float(cl.avg_coherence_closed(n))) < 1e-9


def test_tight_frame_examples():
    tf = oracle.tight_frame_check(np.eye(5))
    assert tf.is_tight and abs(tf.constant - 1) < 1e-12
    tf = oracle.tight_frame_check(oracle.embedded_minimal_vectors(5))
    assert tf.is_tight and abs(tf.constant - 2.5) < 1e-9
    assert not oracle.tight_frame_check([[1, 0], [1, 1]]).uniform
    assert not oracle.tight_frame_check([[1, 0], [0.6, 0.8]]).is_tight


@pytest.mark.parametrize("n", [3, 5, 7, 12, 37])
def test_defect_of_embedded_basis(n):
    basis = oracle.minkowski_basis(n, 256).columns
    nu = oracle.orthogonality_defect_of_basis(basis, 256)
    _, exact = cl.orthogonality_defect(n, 256)
    assert abs(nu / exact - 1) < mpmath.mpf(10) ** -50


def test_defect_rejects_singular():
    with pytest.raises(ValueError):
        oracle.orthogonality_defect_of_basis([[1, 2], [2, 4]])
