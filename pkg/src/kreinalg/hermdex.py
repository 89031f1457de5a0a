"""Hermitian indices and congruence.

For a selfadjoint operator C on a Krein space (J, coordinates) the
triple (h_plus, h_minus, h_zero) is the inertia of the Hermitian
representative J C; h_plus and h_minus are the largest dimensions of
C-strictly positive and negative subspaces, and h_zero = dim ker C.
The triple is a complete congruence invariant for selfadjoint operators
on spaces of equal finite dimension, and this module makes both halves
of that statement executable: a classifier (`is_congruent`) and an
explicit constructor (`build_congruence`) routed through a canonical
form C = X* D X with D a signed diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .densela import Tolerance, herm_eig, spectral_norm, svd
from .errors import (DimensionMismatch, IllConditioned, NotCongruent,
                     NotInvertible, NotSelfadjoint)
from .krein import (IndexTriple, KOperator, KreinSpace, hilbert_space,
                    is_selfadjoint)

__all__ = [
    "COND_CAP",
    "Congruence",
    "CanonicalForm",
    "make_congruence",
    "hermitian_indices",
    "transport",
    "to_hilbert",
    "canonical_form",
    "is_congruent",
    "build_congruence",
]

# Congruences with condition number beyond this are rejected: index
# computation degrades once X*X spans eight orders of magnitude.
COND_CAP = 1e8


@dataclass(frozen=True, eq=False)
class Congruence:
    """An invertible map X between spaces, with its inverse cached."""

    X: KOperator
    X_inv: KOperator

    def __post_init__(self):
        n = self.X.codomain.dim
        resid = spectral_norm(self.X.matrix @ self.X_inv.matrix - np.eye(n))
        scale = max(1.0, spectral_norm(self.X.matrix) * spectral_norm(self.X_inv.matrix))
        if resid > 1e-8 * scale:
            raise NotInvertible("cached inverse does not invert the map")


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    """C = X* D X with D = diag(+1 block, -1 block, 0 block)."""

    indices: IndexTriple
    D: KOperator
    X: Congruence


def make_congruence(X: KOperator, tol: Tolerance = Tolerance()) -> Congruence:
    """Wrap an invertible operator, computing and validating its inverse."""
    if X.domain.dim != X.codomain.dim:
        raise DimensionMismatch(
            f"congruence must map between equal dimensions, got "
            f"{X.domain.dim} -> {X.codomain.dim}")
    n = X.domain.dim
    if n == 0:
        inv = KOperator(X.codomain, X.domain, np.zeros((0, 0), dtype=complex))
        return Congruence(X, inv)
    U, s, V = svd(X.matrix, tol)
    if s[-1] <= tol.rank_tol * s[0]:
        raise NotInvertible("operator is numerically singular")
    if s[0] / s[-1] > COND_CAP:
        raise IllConditioned(
            f"condition number {s[0] / s[-1]:.3e} exceeds cap {COND_CAP:.0e}")
    inv_mat = (V / s) @ U.conj().T
    return Congruence(X, KOperator(X.codomain, X.domain, inv_mat))


def hermitian_indices(C: KOperator, tol: Tolerance = Tolerance()) -> IndexTriple:
    """(h_plus, h_minus, h_zero) via the inertia of J C."""
    if not is_selfadjoint(C, tol):
        raise NotSelfadjoint("hermitian indices are defined for selfadjoint operators")
    JC = C.domain.J @ C.matrix
    w = herm_eig(0.5 * (JC + JC.conj().T), tol).eigenvalues
    band = tol.rank_tol * (float(np.max(np.abs(w))) if w.size else 0.0)
    h_plus = int(np.count_nonzero(w > band))
    h_minus = int(np.count_nonzero(w < -band))
    return IndexTriple(h_plus, h_minus, w.size - h_plus - h_minus)


def _check_condition(X: KOperator, tol: Tolerance):
    if X.domain.dim == 0:
        return
    _, s, _ = svd(X.matrix, tol)
    if s[-1] <= tol.rank_tol * s[0]:
        raise NotInvertible("congruence factor is numerically singular")
    if s[0] / s[-1] > COND_CAP:
        raise IllConditioned(
            f"condition number {s[0] / s[-1]:.3e} exceeds cap {COND_CAP:.0e}")


def transport(B: KOperator, X: Congruence, tol: Tolerance = Tolerance()) -> KOperator:
    """Pull B back along X: returns A = X* B X on X's domain space."""
    if B.domain.dim != X.X.codomain.dim:
        raise DimensionMismatch("operator does not act on the congruence codomain")
    if not is_selfadjoint(B, tol):
        raise NotSelfadjoint("transport expects a selfadjoint operator")
    _check_condition(X.X, tol)
    H, K = X.X.domain, X.X.codomain
    A = H.J @ X.X.matrix.conj().T @ K.J @ B.matrix @ X.X.matrix
    return KOperator(H, H, A)


def to_hilbert(C: KOperator, tol: Tolerance = Tolerance()):
    """Congruent Hilbert-space representative.

    Returns (D, X) with D = J C on the Euclidean space of the same
    coordinates and X the identity coordinate congruence, so C = X* D X
    holds by the inner-product convention with no extra conditioning.
    """
    if not is_selfadjoint(C, tol):
        raise NotSelfadjoint("Hilbert representative requires a selfadjoint operator")
    H = C.domain
    E = hilbert_space(H.dim)
    D = KOperator(E, E, H.J @ C.matrix)
    eye = np.eye(H.dim, dtype=complex)
    X = Congruence(KOperator(H, E, eye), KOperator(E, H, eye))
    return D, X


def canonical_form(C: KOperator, tol: Tolerance = Tolerance()) -> CanonicalForm:
    """Signed-diagonal form C = X* D X, D = diag(I, -I, 0).

    Built from the eigendecomposition of J C: eigenvectors are scaled by
    |eigenvalue|^(1/2) on the nonzero bands (kernel directions keep unit
    scale so X stays invertible).  Ordering: positive eigenvalues
    descending, then negative ones by ascending magnitude, then the
    kernel band.
    """
    if not is_selfadjoint(C, tol):
        raise NotSelfadjoint("canonical form requires a selfadjoint operator")
    H = C.domain
    n = H.dim
    JC = H.J @ C.matrix
    eig = herm_eig(0.5 * (JC + JC.conj().T), tol)
    w, W = eig.eigenvalues, eig.eigenvectors
    band = tol.rank_tol * (float(np.max(np.abs(w))) if w.size else 0.0)
    pos = [i for i in range(n) if w[i] > band]
    neg = [i for i in range(n) if w[i] < -band]
    ker = [i for i in range(n) if -band <= w[i] <= band]
    pos.sort(key=lambda i: -w[i])
    neg.sort(key=lambda i: -w[i])          # ascending magnitude for negatives
    perm = pos + neg + ker
    p, q, z = len(pos), len(neg), len(ker)

    Wp = W[:, perm]
    scale = np.ones(n)
    nz = p + q
    scale[:nz] = np.sqrt(np.abs(w[perm][:nz]))
    X_mat = scale[:, None] * Wp.conj().T
    X_inv_mat = Wp * (1.0 / scale)

    E = hilbert_space(n)
    D_mat = np.zeros((n, n), dtype=complex)
    np.fill_diagonal(D_mat, [1.0] * p + [-1.0] * q + [0.0] * z)
    X = Congruence(KOperator(H, E, X_mat), KOperator(E, H, X_inv_mat))
    return CanonicalForm(indices=IndexTriple(p, q, z),
                         D=KOperator(E, E, D_mat), X=X)


def is_congruent(A: KOperator, B: KOperator, tol: Tolerance = Tolerance()) -> bool:
    """True iff A and B share their index triple (equal finite dimensions)."""
    if A.domain.dim != B.domain.dim:
        raise DimensionMismatch(
            "congruence classification requires equal dimensions, got "
            f"{A.domain.dim} and {B.domain.dim}")
    return hermitian_indices(A, tol) == hermitian_indices(B, tol)


def build_congruence(A: KOperator, B: KOperator,
                     tol: Tolerance = Tolerance()) -> Congruence:
    """Explicit X with A = X* B X, composed through the canonical forms."""
    if not is_congruent(A, B, tol):
        raise NotCongruent(
            f"index triples differ: {tuple(hermitian_indices(A, tol))} vs "
            f"{tuple(hermitian_indices(B, tol))}")
    ca = canonical_form(A, tol)
    cb = canonical_form(B, tol)
    X_mat = cb.X.X_inv.matrix @ ca.X.X.matrix
    X_inv_mat = ca.X.X_inv.matrix @ cb.X.X.matrix
    return Congruence(KOperator(A.domain, B.domain, X_mat),
                      KOperator(B.domain, A.domain, X_inv_mat))
