"""Factorization of a selfadjoint operator through an external Krein space.

The central construction: every selfadjoint C on (H, J) factors as
C = A A* with A acting from an auxiliary space into H and ker A = {0},
and the signature of the auxiliary space is forced: its indices equal
the hermitian indices of C.  `bk_factorize` builds one canonical such
factorization from the spectral bands of the Hilbert representative
J C; `bk_verify` checks an arbitrary candidate, which is exactly the
converse direction.  `keyth_verify` handles the signature-operator
variant C = T^H J_A T on a Hilbert space, and `contained_space`
repackages the factorization as the range of A carrying the transferred
inner product.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .densela import Tolerance, herm_eig, inertia, null_basis, spectral_norm, svd
from .errors import DimensionMismatch, NotSelfadjoint, NotSymmetry, PreconditionFailed
from .hermdex import hermitian_indices
from .krein import (KOperator, KreinSpace, k_adjoint, is_selfadjoint,
                    space_indices)

__all__ = [
    "BKFactorization",
    "SignatureFactorization",
    "ContainedSpace",
    "bk_factorize",
    "bk_verify",
    "keyth_verify",
    "contained_space",
]

_UNIQUENESS_NOTE = ("factorizations of a fixed operator differ only by a "
                    "J-unitary change of the factor space; in finite "
                    "dimension every factorization is essentially unique")


@dataclass(frozen=True, eq=False)
class BKFactorization:
    """Factor space and factor: C = A A* with ker A = {0}."""

    A_space: KreinSpace
    A: KOperator


@dataclass(frozen=True, eq=False)
class SignatureFactorization:
    """C = T^H J_A T with J_A a signature operator on a Hilbert space."""

    K_space: KreinSpace
    J_A: KOperator
    T: KOperator

    def __post_init__(self):
        tol = Tolerance()
        n = self.K_space.dim
        if spectral_norm(self.K_space.J - np.eye(n)) > tol.residual_tol:
            raise NotSymmetry("signature factorizations live over a Hilbert space")
        M = self.J_A.matrix
        scale = max(1.0, spectral_norm(M))
        if (spectral_norm(M - M.conj().T) > tol.residual_tol * scale
                or spectral_norm(M @ M - np.eye(n)) > tol.residual_tol * scale * scale):
            raise NotSymmetry("operator is not selfadjoint and unitary")


@dataclass(frozen=True, eq=False)
class ContainedSpace:
    """ran A with the inner product that makes the inclusion an isomorphism."""

    basis: np.ndarray
    gram: np.ndarray


def bk_factorize(C: KOperator, tol: Tolerance = Tolerance()) -> BKFactorization:
    """Canonical factorization C = A A* with ker A = {0}.

    Construction: D = J C is Hermitian; take its eigenvectors on the
    positive and negative bands, so the factor space is C^(p+q) with the
    symmetry diag(+1 block, -1 block), and map x to J |D|^(1/2) W x
    where W stacks the selected eigenvectors.  Kernel directions of C
    never enter the factor space, which is what keeps A injective.
    """
    if not is_selfadjoint(C, tol):
        raise NotSelfadjoint("factorization requires a selfadjoint operator")
    H = C.domain
    D = H.J @ C.matrix
    eig = herm_eig(0.5 * (D + D.conj().T), tol)
    w, V = eig.eigenvalues, eig.eigenvectors
    band = tol.rank_tol * (float(np.max(np.abs(w))) if w.size else 0.0)
    plus = w > band
    minus = w < -band
    p, q = int(np.count_nonzero(plus)), int(np.count_nonzero(minus))
    W = np.hstack([V[:, plus], V[:, minus]])
    lam = np.concatenate([w[plus], w[minus]])
    A_mat = H.J @ (W * np.sqrt(np.abs(lam)))

    J_A = np.zeros((p + q, p + q), dtype=complex)
    np.fill_diagonal(J_A, [1.0] * p + [-1.0] * q)
    A_space = KreinSpace(dim=p + q, J=J_A)
    return BKFactorization(A_space=A_space, A=KOperator(A_space, H, A_mat))


def bk_verify(C: KOperator, F: BKFactorization, tol: Tolerance = Tolerance()) -> dict:
    """Check a candidate factorization of C; failures are reported, not raised.

    The report carries the relative product residual, the injectivity
    verdict, both index pairs, and the equality verdict between them.
    """
    if F.A.codomain.dim != C.domain.dim:
        raise DimensionMismatch("factor does not map into the operator's space")
    A_star = k_adjoint(F.A)
    diff = C.matrix - F.A.matrix @ A_star.matrix
    c_norm = spectral_norm(C.matrix)
    residual = spectral_norm(diff) / c_norm if c_norm > 0 else spectral_norm(diff)
    injective = null_basis(F.A.matrix, tol).shape[1] == 0
    ind = space_indices(F.A_space, tol)
    idx = hermitian_indices(C, tol)
    index_equality = (ind[0] == idx.h_plus and ind[1] == idx.h_minus
                      and F.A_space.dim == idx.h_plus + idx.h_minus)
    return {
        "product_residual": float(residual),
        "injective": bool(injective),
        "factor_space_indices": [ind[0], ind[1]],
        "operator_indices": list(idx),
        "index_equality": bool(index_equality),
        "passed": bool(residual <= tol.residual_tol and injective and index_equality),
        "note": _UNIQUENESS_NOTE,
    }


def keyth_verify(C: KOperator, S: SignatureFactorization,
                 tol: Tolerance = Tolerance()) -> dict:
    """Check a signature factorization C = T^H J_A T over a Hilbert space.

    Preconditions (raised as ``PreconditionFailed`` with the failing
    list): C lives on a Hilbert space and has trivial kernel.  The
    theorem's hypotheses on T (trivial kernel, full range) are evaluated
    and reported alongside the index comparison.
    """
    failures = []
    H = C.domain
    if spectral_norm(H.J - np.eye(H.dim)) > tol.residual_tol:
        failures.append("operator space is not a Hilbert space")
    if not is_selfadjoint(C, tol):
        failures.append("operator is not selfadjoint")
    elif null_basis(C.matrix, tol).shape[1] != 0:
        failures.append("operator has a nontrivial kernel")
    if failures:
        raise PreconditionFailed(failures)
    if S.T.domain.dim != H.dim or S.T.codomain.dim != S.K_space.dim:
        raise DimensionMismatch("factor does not map the operator space into K")

    recon = S.T.matrix.conj().T @ S.J_A.matrix @ S.T.matrix
    c_norm = spectral_norm(C.matrix)
    residual = spectral_norm(C.matrix - recon) / c_norm if c_norm > 0 else 0.0
    ker_trivial = null_basis(S.T.matrix, tol).shape[1] == 0
    _, sv, _ = svd(S.T.matrix, tol)
    rank = int(np.count_nonzero(sv > tol.rank_tol * sv[0])) if sv.size else 0
    range_dense = rank == S.K_space.dim
    h_C = hermitian_indices(C, tol)
    pj, qj, zj = inertia(S.J_A.matrix, tol)
    index_equality = (h_C.h_plus, h_C.h_minus) == (pj, qj) and zj == 0
    return {
        "reconstruction_residual": float(residual),
        "kernel_trivial": bool(ker_trivial),
        "range_dense": bool(range_dense),
        "operator_indices": list(h_C),
        "signature_indices": [pj, qj],
        "index_equality": bool(index_equality),
        "passed": bool(residual <= tol.residual_tol and ker_trivial
                       and range_dense and index_equality),
    }


def contained_space(C: KOperator, tol: Tolerance = Tolerance()) -> ContainedSpace:
    """ran A as a subspace of H carrying the factor-space inner product.

    Basis columns are Euclidean-orthonormal in H; the Gram matrix is the
    pulled-back factor-space inner product on that basis, so its inertia
    reproduces the hermitian indices of C and the inclusion map is an
    isomorphism onto the factor space.
    """
    F = bk_factorize(C, tol)
    A = F.A.matrix
    r = F.A_space.dim
    if r == 0:
        return ContainedSpace(basis=np.zeros((C.domain.dim, 0), dtype=complex),
                              gram=np.zeros((0, 0), dtype=complex))
    Q, R = np.linalg.qr(A)
    R_inv = np.linalg.solve(R, np.eye(r, dtype=complex))
    G = R_inv.conj().T @ F.A_space.J @ R_inv
    return ContainedSpace(basis=Q, gram=0.5 * (G + G.conj().T))
