"""Independent checks on the cyclotomic lattice formulas.

Nothing in here uses the closed-form cosine formula. The numeric side embeds
Z[zeta_n] into R^d through its complex embeddings and measures angles,
frames and defects with ordinary Euclidean geometry. The exact side
enumerates short lattice vectors straight from the doubled Gram matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import NamedTuple, Sequence

import mpmath
import numpy as np

from .config import default_precision
from .cyclolattice import _check_n, doubled_gram, gram_matrix
from .exact import to_mpf
from .numtheory import cyclotomic_polynomial, euler_phi

DEFAULT_NODE_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """Enumeration visited more nodes than allowed."""


@dataclass
class EmbeddingBasis:
    n: int
    d: int
    columns: list[list[mpmath.mpf]]
    precision_bits: int

    def as_array(self) -> np.ndarray:
        """d x d float64 matrix with the embedded power basis as columns."""
        return np.array([[float(x) for x in col] for col in self.columns]).T


def _embedding_exponents(n: int) -> list[int]:
    # one embedding per conjugate pair: zeta -> exp(2 pi i a / n), 1 <= a < n/2
    return [a for a in range(1, (n + 1) // 2) if gcd(a, n) == 1 and 2 * a < n]


def embed_power(n: int, k: int, prec: int | None = None) -> list[mpmath.mpf]:
    """Minkowski image of zeta_n**k: (Re, Im) of each embedding, ascending a."""
    _check_n(n)
    with mpmath.workprec(prec or default_precision()):
        out = []
        for a in _embedding_exponents(n):
            # exact reduction of the angle to 2 pi * r / n with 0 <= r < n
            t = mpmath.mpf(2 * ((a * k) % n)) / n
            out.append(mpmath.cospi(t))
            out.append(mpmath.sinpi(t))
        return out


def minkowski_basis(n: int, precision_bits: int | None = None) -> EmbeddingBasis:
    _check_n(n)
    prec = precision_bits or default_precision()
    if prec < 53:
        raise ValueError("precision_bits must be at least 53")
    d = euler_phi(n)
    cols = [embed_power(n, j, prec) for j in range(d)]
    return EmbeddingBasis(n=n, d=d, columns=cols, precision_bits=prec)


class GramCheck(NamedTuple):
    deviation: float
    passed: bool


def numeric_gram_check(n: int, precision_bits: int | None = None, tol: float = 1e-9) -> GramCheck:
    """Largest entrywise gap between dot products of embedded columns and the exact Gram."""
    basis = minkowski_basis(n, precision_bits)
    exact = gram_matrix(n)
    worst = mpmath.mpf(0)
    with mpmath.workprec(basis.precision_bits):
        cols = basis.columns
        for i in range(basis.d):
            for j in range(i, basis.d):
                dev = abs(mpmath.fdot(cols[i], cols[j]) - to_mpf(exact[i][j]))
                if dev > worst:
                    worst = dev
    worst = float(worst)
    return GramCheck(worst, worst <= tol)


def root_of_unity_coords(n: int, k: int) -> list[int]:
    """Coordinates of zeta_n**k in the power basis, via x**k mod Phi_n."""
    _check_n(n)
    if not 0 <= k < n:
        raise ValueError(f"exponent must lie in 0..{n - 1}, got {k}")
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    coords = [0] * d
    if k < d:
        coords[k] = 1
        return coords
    coords[d - 1] = 1
    for _ in range(k - d + 1):
        top = coords[-1]
        coords = [0] + coords[:-1]
        if top:
            for i in range(d):
                coords[i] -= top * phi[i]
    return coords


@dataclass
class ShortVectorReport:
    n: int
    min_norm_doubled: int | None
    count: int
    vectors: list[tuple[int, ...]]
    nodes: int = 0
    bound: int = 0


def _fincke_pohst_form(Q: list[list[int]]):
    """Exact quadratic-form decomposition x'Qx = sum_i q[i][i] (x_i + sum_{j>i} q[i][j] x_j)**2."""
    d = len(Q)
    q = [[Fraction(Q[i][j]) for j in range(d)] for i in range(d)]
    for i in range(d):
        if q[i][i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, d):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, d):
            for l in range(k, d):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def _integer_window(center: Fraction, radius_sq: Fraction) -> tuple[int, int]:
    """Smallest and largest integer x with (x - center)**2 <= radius_sq.

    Returns an empty range (lo > hi) when no integer qualifies.
    """
    # isqrt on floor(radius_sq) brackets the window; exact tests settle the ends
    r = isqrt(radius_sq.numerator // radius_sq.denominator) + 1
    lo = (center.numerator // center.denominator) - r
    top = -((-center.numerator) // center.denominator) + r
    while lo <= top and (lo - center) ** 2 > radius_sq:
        lo += 1
    if lo > top:
        return 1, 0
    hi = top
    while (hi - center) ** 2 > radius_sq:
        hi -= 1
    return lo, hi


def enumerate_short(Q: list[list[int]], bound: int, node_budget: int = DEFAULT_NODE_BUDGET):
    """All nonzero integer x with x'Qx <= bound, as (norm, x) pairs.

    Exact rational arithmetic throughout, so no lattice point inside the
    ellipsoid can be lost to rounding.
    """
    d = len(Q)
    q = _fincke_pohst_form(Q)
    x = [0] * d
    found = []
    nodes = 0
    bound_f = Fraction(bound)

    def level(i: int, remaining: Fraction) -> None:
        nonlocal nodes
        center = -sum((q[i][j] * x[j] for j in range(i + 1, d) if x[j]), Fraction(0))
        lo, hi = _integer_window(center, remaining / q[i][i])
        for v in range(lo, hi + 1):
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded(f"enumeration exceeded {node_budget} nodes")
            x[i] = v
            rem = remaining - q[i][i] * (v - center) ** 2
            if i == 0:
                if any(x):
                    found.append((bound_f - rem, tuple(x)))
            else:
                level(i - 1, rem)
        x[i] = 0

    level(d - 1, bound_f)
    return found, nodes


def short_vectors(
    n: int, doubled_norm_bound: int | None = None, node_budget: int = DEFAULT_NODE_BUDGET
) -> ShortVectorReport:
    """Exact minimum and minimizers among vectors with doubled norm <= bound.

    Coordinates refer to the power basis; norms are those of the doubled
    Gram matrix, which is integral. The bound defaults to phi(n).
    """
    _check_n(n)
    d = euler_phi(n)
    bound = d if doubled_norm_bound is None else doubled_norm_bound
    if bound < d:
        raise ValueError(f"bound {bound} is below the doubled minimum {d}")
    found, nodes = enumerate_short(doubled_gram(n), bound, node_budget)
    if not found:
        return ShortVectorReport(n, None, 0, [], nodes, bound)
    norms = [norm for norm, _ in found]
    best = min(norms)
    if best.denominator != 1:
        raise ArithmeticError("doubled Gram produced a non-integral norm")
    vecs = sorted(v for norm, v in found if norm == best)
    return ShortVectorReport(n, int(best), len(vecs), vecs, nodes, bound)


@dataclass
class MinimalVectorCheck:
    n: int
    status: str  # "ok", "mismatch" or "budget"
    count: int = 0
    expected_count: int = 0
    min_norm_doubled: int | None = None
    detail: str = ""
    nodes: int = 0

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def verify_minimal_vectors(n: int, node_budget: int = DEFAULT_NODE_BUDGET) -> MinimalVectorCheck:
    """Check that the minimal vectors are exactly the +/- roots of unity."""
    _check_n(n)
    d = euler_phi(n)
    s = n if n % 2 == 0 else 2 * n
    try:
        rep = short_vectors(n, d, node_budget)
    except BudgetExceeded as exc:
        return MinimalVectorCheck(n, "budget", expected_count=s, detail=str(exc))
    roots = set()
    for k in range(n):
        c = tuple(root_of_unity_coords(n, k))
        roots.add(c)
        roots.add(tuple(-v for v in c))
    problems = []
    if rep.min_norm_doubled != d:
        problems.append(f"doubled minimum {rep.min_norm_doubled} != {d}")
    if rep.count != s:
        problems.append(f"{rep.count} minimal vectors, expected {s}")
    if set(rep.vectors) != roots:
        problems.append("minimal vectors differ from the roots of unity")
    return MinimalVectorCheck(
        n,
        "mismatch" if problems else "ok",
        count=rep.count,
        expected_count=s,
        min_norm_doubled=rep.min_norm_doubled,
        detail="; ".join(problems),
        nodes=rep.nodes,
    )


def embedded_minimal_vectors(n: int, prec: int | None = None) -> list[list[mpmath.mpf]]:
    """Minkowski images of zeta**k for k = 1..s_half, one per +/- pair."""
    _check_n(n)
    sh = n if n % 2 else n // 2
    return [embed_power(n, k, prec) for k in range(1, sh + 1)]


def _as_unit_rows(vectors) -> np.ndarray:
    X = np.asarray([[float(v) for v in vec] for vec in vectors], dtype=float)
    if X.ndim != 2 or X.shape[0] < 2:
        raise ValueError("need at least two vectors")
    norms = np.linalg.norm(X, axis=1)
    if np.any(norms == 0):
        raise ValueError("zero vector in set")
    return X / norms[:, None]


def set_coherence(vectors) -> float:
    """Largest |cos| over pairs of distinct vectors."""
    U = _as_unit_rows(vectors)
    G = np.abs(U @ U.T)
    np.fill_diagonal(G, 0.0)
    return float(G.max())


def set_avg_coherence(vectors) -> float:
    """max over x of the mean |cos(x, y)| over the other vectors y."""
    U = _as_unit_rows(vectors)
    G = np.abs(U @ U.T)
    np.fill_diagonal(G, 0.0)
    return float(G.sum(axis=1).max() / (len(U) - 1))


class TightFrame(NamedTuple):
    is_tight: bool
    constant: float
    uniform: bool


def tight_frame_check(vectors, tol: float = 1e-8) -> TightFrame:
    """Is sum_x x x^T a multiple of the identity on the span of the vectors?

    Returns the frame constant c. Sets whose vectors do not share one norm
    come back with ``uniform=False`` and are never tight.
    """
    X = np.asarray([[float(v) for v in vec] for vec in vectors], dtype=float)
    if X.ndim != 2 or len(X) == 0:
        raise ValueError("need a nonempty list of vectors")
    norms = np.linalg.norm(X, axis=1)
    if np.max(np.abs(norms - norms[0])) > tol * max(1.0, norms[0]):
        return TightFrame(False, float("nan"), False)
    F = X.T @ X
    _, sv, Vt = np.linalg.svd(X, full_matrices=False)
    rank = int(np.sum(sv > 1e-9 * sv[0]))
    V = Vt[:rank].T
    c = float(np.trace(F) / rank)
    dev = np.max(np.abs(F - c * (V @ V.T)))
    return TightFrame(bool(dev <= tol), c, True)


def orthogonality_defect_of_basis(basis: Sequence[Sequence], prec: int | None = None):
    """prod ||b_j|| / |det B| at ``prec`` bits; B has the b_j as columns."""
    with mpmath.workprec(prec or default_precision()):
        B = mpmath.matrix([[mpmath.mpf(x) for x in b] for b in basis]).T
        if B.rows != B.cols:
            raise ValueError("basis must be square")
        norms = mpmath.mpf(1)
        for j in range(B.cols):
            norms *= mpmath.sqrt(mpmath.fsum(B[i, j] ** 2 for i in range(B.rows)))
        det = abs(mpmath.det(B))
        if det <= norms * mpmath.mpf(2) ** (-(mpmath.mp.prec // 2)):
            raise ValueError("basis is singular")
        return norms / det
