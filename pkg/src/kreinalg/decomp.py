"""Three-part decomposition of a space along a selfadjoint operator.

`decompose` splits the coordinate space as M_plus + M_minus + M_zero
using the spectral bands of the Hermitian representative J C: positive
band, negative band, kernel.  The parts are pairwise C-orthogonal, the
signed parts are C-strictly definite, the kernel part spans ker C, and
the dimensions reproduce the hermitian indices.  `validate` re-checks
all of that for an arbitrary candidate decomposition (they are not
unique), and `projections` inverts the concatenated basis to produce
the associated orthogonal-sum projections Q.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .densela import Tolerance, herm_eig, null_basis, spectral_norm, svd
from .errors import DimensionMismatch, NotDirect, NotSelfadjoint
from .hermdex import hermitian_indices
from .krein import (KOperator, Subspace, SubspaceClass, c_orthogonal,
                    classify_subspace, is_selfadjoint)

__all__ = [
    "Decomposition",
    "DecompositionProjections",
    "decompose",
    "validate",
    "projections",
]


@dataclass(frozen=True, eq=False)
class Decomposition:
    M_plus: Subspace
    M_minus: Subspace
    M_zero: Subspace


@dataclass(frozen=True, eq=False)
class DecompositionProjections:
    Q_plus: KOperator
    Q_minus: KOperator
    Q_zero: KOperator


def decompose(C: KOperator, tol: Tolerance = Tolerance()) -> Decomposition:
    """Spectral decomposition M_plus + M_minus + M_zero for selfadjoint C."""
    if not is_selfadjoint(C, tol):
        raise NotSelfadjoint("decomposition requires a selfadjoint operator")
    H = C.domain
    JC = H.J @ C.matrix
    eig = herm_eig(0.5 * (JC + JC.conj().T), tol)
    w, V = eig.eigenvalues, eig.eigenvectors
    band = tol.rank_tol * (float(np.max(np.abs(w))) if w.size else 0.0)
    plus = V[:, w > band]
    minus = V[:, w < -band]
    zero = V[:, (w >= -band) & (w <= band)]
    return Decomposition(M_plus=Subspace(H, plus),
                         M_minus=Subspace(H, minus),
                         M_zero=Subspace(H, zero))


def _rank(A: np.ndarray, tol: Tolerance) -> int:
    if min(A.shape) == 0:
        return 0
    _, s, _ = svd(A, tol)
    return int(np.count_nonzero(s > tol.rank_tol * s[0]))


def _pair_direct(A: Subspace, B: Subspace, tol: Tolerance) -> bool:
    stacked = np.hstack([A.basis, B.basis])
    return _rank(stacked, tol) == A.dim + B.dim


def validate(C: KOperator, dec: Decomposition, tol: Tolerance = Tolerance()) -> dict:
    """Full condition report for a candidate decomposition of C's space.

    Checks, one boolean each: sign conditions on the three parts
    (including M_zero = ker C), pairwise directness of the two-part
    sums, pairwise C-orthogonality, dimension match with the hermitian
    indices, and directness of the full three-part sum.  Failures are
    reported, not raised.
    """
    if not is_selfadjoint(C, tol):
        raise NotSelfadjoint("validation requires a selfadjoint operator")
    H = C.domain
    for part in (dec.M_plus, dec.M_minus, dec.M_zero):
        if part.space.dim != H.dim:
            raise DimensionMismatch("decomposition parts live in a different space")
    mp, mm, mz = dec.M_plus, dec.M_minus, dec.M_zero

    cls_plus = classify_subspace(C, mp, tol)
    cls_minus = classify_subspace(C, mm, tol)
    kernel_dim = null_basis(C.matrix, tol).shape[1]
    kernel_residual = spectral_norm(C.matrix @ mz.basis)
    kernel_ok = (mz.dim == kernel_dim
                 and kernel_residual <= tol.residual_tol * max(1.0, spectral_norm(C.matrix)))
    sign_ok = ((mp.dim == 0 or cls_plus == SubspaceClass.STRICTLY_POSITIVE)
               and (mm.dim == 0 or cls_minus == SubspaceClass.STRICTLY_NEGATIVE)
               and kernel_ok)

    pair_direct = (_pair_direct(mp, mm, tol)
                   and _pair_direct(mp, mz, tol)
                   and _pair_direct(mm, mz, tol))

    pair_orth = (c_orthogonal(C, mp, mm, tol)
                 and c_orthogonal(C, mp, mz, tol)
                 and c_orthogonal(C, mm, mz, tol))

    idx = hermitian_indices(C, tol)
    dims_ok = (mp.dim, mm.dim, mz.dim) == tuple(idx)

    stacked = np.hstack([mp.basis, mm.basis, mz.basis])
    if stacked.shape[1] == 0:
        min_sv = 1.0 if H.dim == 0 else 0.0
        direct = H.dim == 0
    else:
        _, s, _ = svd(stacked, tol)
        min_sv = float(s[-1]) if stacked.shape[1] <= H.dim else 0.0
        direct = stacked.shape[1] == H.dim and min_sv > tol.rank_tol

    report = {
        "sign_conditions": bool(sign_ok),
        "pairwise_sums_direct": bool(pair_direct),
        "pairwise_c_orthogonal": bool(pair_orth),
        "dimensions_match_indices": bool(dims_ok),
        "direct_sum": bool(direct),
        "dims": [mp.dim, mm.dim, mz.dim],
        "indices": list(idx),
        "kernel_residual": float(kernel_residual),
        "min_direct_singular_value": float(min_sv),
    }
    report["passed"] = bool(sign_ok and pair_direct and pair_orth and dims_ok and direct)
    return report


def projections(C: KOperator, dec: Decomposition,
                tol: Tolerance = Tolerance()) -> DecompositionProjections:
    """Projections Q_plus, Q_minus, Q_zero of the direct splitting.

    Each Q maps f to its component in one part along the other two;
    computed by inverting the concatenated basis.  Raises ``NotDirect``
    when the parts fail to span directly.
    """
    H = C.domain
    mp, mm, mz = dec.M_plus, dec.M_minus, dec.M_zero
    B = np.hstack([mp.basis, mm.basis, mz.basis])
    if B.shape[1] != H.dim or _rank(B, tol) != H.dim:
        raise NotDirect("decomposition parts do not span the space directly")
    if H.dim == 0:
        E = np.zeros((0, 0), dtype=complex)
    else:
        try:
            E = np.linalg.inv(B)
        except np.linalg.LinAlgError as exc:
            raise NotDirect(str(exc)) from exc
    p, q = mp.dim, mm.dim
    Q_plus = B[:, :p] @ E[:p]
    Q_minus = B[:, p:p + q] @ E[p:p + q]
    Q_zero = B[:, p + q:] @ E[p + q:]
    return DecompositionProjections(Q_plus=KOperator(H, H, Q_plus),
                                    Q_minus=KOperator(H, H, Q_minus),
                                    Q_zero=KOperator(H, H, Q_zero))
