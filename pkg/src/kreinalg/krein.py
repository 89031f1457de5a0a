"""The Krein-space model.

A space is a pair (dimension, fundamental symmetry J) with J = J* and
J^2 = I; the indefinite inner product in coordinates is

    <f, g> = g^H J f

so the associated Hilbert space is simply the Euclidean coordinate
space.  Operators are matrices tagged with their domain and codomain
spaces, which pins down the Krein adjoint A* = J_dom A^H J_cod.
Subspaces always carry Euclidean-orthonormal bases, which keeps
dimension counting and Gram-matrix conditioning trivial.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .densela import Tolerance, inertia, spectral_norm, svd
from .errors import DimensionMismatch, InputError, NotSymmetry

__all__ = [
    "KreinSpace",
    "KOperator",
    "Subspace",
    "IndexTriple",
    "SubspaceClass",
    "make_space",
    "hilbert_space",
    "space_indices",
    "identity_op",
    "k_adjoint",
    "c_inner",
    "is_selfadjoint",
    "make_subspace",
    "classify_subspace",
    "c_orthogonal",
]


@dataclass(frozen=True, eq=False)
class KreinSpace:
    """A coordinate space with a validated fundamental symmetry."""

    dim: int
    J: np.ndarray


@dataclass(frozen=True, eq=False)
class KOperator:
    """A matrix acting from ``domain`` to ``codomain``."""

    domain: KreinSpace
    codomain: KreinSpace
    matrix: np.ndarray

    def __post_init__(self):
        mat = np.asarray(self.matrix, dtype=complex)
        if mat.shape != (self.codomain.dim, self.domain.dim):
            raise DimensionMismatch(
                f"operator shape {mat.shape} does not match spaces "
                f"({self.codomain.dim}, {self.domain.dim})")
        object.__setattr__(self, "matrix", mat)


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace given by a Euclidean-orthonormal column basis."""

    space: KreinSpace
    basis: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


class IndexTriple(NamedTuple):
    """Hermitian indices (h_plus, h_minus) plus kernel dimension h_zero."""

    h_plus: int
    h_minus: int
    h_zero: int


class SubspaceClass(str, enum.Enum):
    STRICTLY_POSITIVE = "strictly_positive"
    STRICTLY_NEGATIVE = "strictly_negative"
    NONNEGATIVE = "nonnegative"
    NONPOSITIVE = "nonpositive"
    NEUTRAL = "neutral"
    INDEFINITE = "indefinite"


def make_space(J, tol: Tolerance = Tolerance()) -> KreinSpace:
    """Validate J = J* and J^2 = I and wrap it as a space."""
    J = np.asarray(J, dtype=complex)
    if J.ndim != 2 or J.shape[0] != J.shape[1]:
        raise NotSymmetry(f"fundamental symmetry must be square, got {J.shape}")
    if J.size and not np.isfinite(J).all():
        raise InputError("fundamental symmetry contains NaN or Inf entries")
    n = J.shape[0]
    scale = max(1.0, spectral_norm(J))
    if spectral_norm(J - J.conj().T) > tol.residual_tol * scale:
        raise NotSymmetry("candidate symmetry is not Hermitian")
    if spectral_norm(J @ J - np.eye(n)) > tol.residual_tol * scale * scale:
        raise NotSymmetry("candidate symmetry does not square to the identity")
    return KreinSpace(dim=n, J=J)


def hilbert_space(n: int) -> KreinSpace:
    """The Euclidean space of dimension n (J = I)."""
    return KreinSpace(dim=n, J=np.eye(n, dtype=complex))


def space_indices(H: KreinSpace, tol: Tolerance = Tolerance()) -> tuple[int, int]:
    """(ind_plus, ind_minus): dimensions of the +1 and -1 eigenspaces of J."""
    n_plus, n_minus, n_zero = inertia(H.J, tol)
    if n_zero:
        raise NotSymmetry("fundamental symmetry has a numerically zero eigenvalue")
    return n_plus, n_minus


def identity_op(H: KreinSpace) -> KOperator:
    return KOperator(H, H, np.eye(H.dim, dtype=complex))


def k_adjoint(A: KOperator) -> KOperator:
    """Krein adjoint: J_dom A^H J_cod, with domain and codomain swapped."""
    adj = A.domain.J @ A.matrix.conj().T @ A.codomain.J
    return KOperator(domain=A.codomain, codomain=A.domain, matrix=adj)


def _require_endomorphism(C: KOperator):
    if C.domain.dim != C.codomain.dim or not np.array_equal(C.domain.J, C.codomain.J):
        raise DimensionMismatch("operator must act on a single space")


def c_inner(C: KOperator, f, g) -> complex:
    """The C-inner product <f, g>_C = <Cf, g> = g^H J C f."""
    _require_endomorphism(C)
    f = np.asarray(f, dtype=complex).reshape(-1)
    g = np.asarray(g, dtype=complex).reshape(-1)
    if f.shape[0] != C.domain.dim or g.shape[0] != C.domain.dim:
        raise DimensionMismatch(
            f"vectors of length {f.shape[0]}, {g.shape[0]} on a "
            f"{C.domain.dim}-dimensional space")
    return complex(g.conj() @ (C.domain.J @ (C.matrix @ f)))


def is_selfadjoint(C: KOperator, tol: Tolerance = Tolerance()) -> bool:
    """True iff C = C*, equivalently iff J C is Hermitian within tolerance."""
    _require_endomorphism(C)
    JC = C.domain.J @ C.matrix
    return spectral_norm(JC - JC.conj().T) <= tol.residual_tol * spectral_norm(C.matrix)


def make_subspace(H: KreinSpace, vectors, tol: Tolerance = Tolerance()) -> Subspace:
    """Span of the given columns, re-orthonormalized; dependent columns dropped."""
    V = np.asarray(vectors, dtype=complex)
    if V.ndim != 2 or V.shape[0] != H.dim:
        raise DimensionMismatch(
            f"spanning columns of shape {V.shape} in a {H.dim}-dimensional space")
    if V.shape[1] == 0:
        return Subspace(H, np.zeros((H.dim, 0), dtype=complex))
    U, s, _ = svd(V, tol)
    cut = tol.rank_tol * (float(s[0]) if s.size else 0.0)
    rank = int(np.count_nonzero(s > cut))
    return Subspace(H, U[:, :rank])


def _gram(C: KOperator, M: Subspace, N: Subspace) -> np.ndarray:
    # Entries <m_j, n_i>_C on the two bases.
    return N.basis.conj().T @ (C.domain.J @ C.matrix) @ M.basis


def classify_subspace(C: KOperator, M: Subspace,
                      tol: Tolerance = Tolerance()) -> SubspaceClass:
    """Sign class of the C-inner product restricted to M.

    Decided by the inertia of the C-Gram matrix of M's basis; a strict
    class additionally requires the Gram to have no numerical kernel.
    """
    _require_endomorphism(C)
    if M.space.dim != C.domain.dim:
        raise DimensionMismatch("subspace does not live in the operator's space")
    G = _gram(C, M, M)
    G = 0.5 * (G + G.conj().T)
    # band against the ambient operator norm: the Gram of a neutral
    # subspace cancels to round-off, its own norm is no yardstick
    p, q, z = inertia(G, tol, scale=spectral_norm(C.matrix))
    if p and q:
        return SubspaceClass.INDEFINITE
    if p:
        return SubspaceClass.STRICTLY_POSITIVE if z == 0 else SubspaceClass.NONNEGATIVE
    if q:
        return SubspaceClass.STRICTLY_NEGATIVE if z == 0 else SubspaceClass.NONPOSITIVE
    return SubspaceClass.NEUTRAL


def c_orthogonal(C: KOperator, M: Subspace, N: Subspace,
                 tol: Tolerance = Tolerance()) -> bool:
    """True iff <m, n>_C vanishes for all m in M, n in N, within tolerance."""
    _require_endomorphism(C)
    if M.space.dim != C.domain.dim or N.space.dim != C.domain.dim:
        raise DimensionMismatch("subspaces do not live in the operator's space")
    return spectral_norm(_gram(C, M, N)) <= tol.residual_tol * spectral_norm(C.matrix)
