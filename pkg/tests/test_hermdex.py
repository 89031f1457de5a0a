import numpy as np
import pytest

from kreinalg.errors import (DimensionMismatch, IllConditioned, NotCongruent,
                             NotInvertible, NotSelfadjoint)
from kreinalg.hermdex import (build_congruence, canonical_form,
                              hermitian_indices, is_congruent,
                              make_congruence, to_hilbert, transport)
from kreinalg.krein import (IndexTriple, KOperator, hilbert_space, identity_op,
                            k_adjoint, make_space)

J2 = np.diag([1.0, -1.0]).astype(complex)


def op(space, M):
    return KOperator(space, space, np.asarray(M, dtype=complex))


def test_indices_of_identity_match_space_signature():
    # h_pm(1) equals the signature of the space itself
    for diag in ([1.0, -1.0], [1.0, 1.0, -1.0], [-1.0]):
        H = make_space(np.diag(diag))
        idx = hermitian_indices(identity_op(H))
        pos = sum(1 for d in diag if d > 0)
        assert idx == IndexTriple(pos, len(diag) - pos, 0)


def test_indices_of_zero():
    H = make_space(J2)
    assert hermitian_indices(op(H, np.zeros((2, 2)))) == (0, 0, 2)


def test_indices_c2_example():
    H = make_space(J2)
    assert hermitian_indices(op(H, [[0, 1], [-1, 0]])) == (1, 1, 0)


def test_indices_require_selfadjoint():
    H = make_space(J2)
    with pytest.raises(NotSelfadjoint):
        hermitian_indices(op(H, [[0, 1], [1, 0]]))


def test_canonical_form_diagonal_oracle():
    H = hilbert_space(3)
    cf = canonical_form(op(H, np.diag([4.0, -9.0, 0.0])))
    assert cf.indices == (1, 1, 1)
    assert np.allclose(np.diag(cf.D.matrix), [1.0, -1.0, 0.0])
    # scales are sqrt of |eigenvalue|, kernel keeps unit scale
    assert np.allclose(np.abs(cf.X.X.matrix), np.diag([2.0, 3.0, 1.0]), atol=1e-12)
    X, Xi = cf.X.X.matrix, cf.X.X_inv.matrix
    assert np.allclose(X @ Xi, np.eye(3), atol=1e-12)


def test_canonical_form_ordering():
    # positives descending, negatives by ascending magnitude, kernel last
    H = hilbert_space(4)
    cf = canonical_form(op(H, np.diag([5.0, 2.0, -1.0, -4.0])))
    assert np.allclose(np.abs(cf.X.X.matrix),
                       np.diag([np.sqrt(5.0), np.sqrt(2.0), 1.0, 2.0]),
                       atol=1e-12)


def test_canonical_form_reconstructs():
    H = make_space(J2)
    C = op(H, [[0, 1], [-1, 0]])
    cf = canonical_form(C)
    X = cf.X.X
    recon = H.J @ X.matrix.conj().T @ cf.D.matrix @ X.matrix
    assert np.allclose(recon, C.matrix, atol=1e-10)


def test_transport_preserves_indices():
    H = make_space(J2)
    C = op(H, [[0, 1], [-1, 0]])
    K = hilbert_space(2)
    M = np.array([[2.0, 1.0], [0.0, 1.0]], dtype=complex)
    X = make_congruence(KOperator(K, H, M))
    A = transport(C, X)
    assert hermitian_indices(A) == hermitian_indices(C)
    # and the pulled back operator is selfadjoint on the new space
    assert A.domain is K


def test_transport_identity_roundtrip():
    H = hilbert_space(2)
    C = op(H, [[2.0, 0], [0, -1.0]])
    X = make_congruence(identity_op(H))
    assert np.allclose(transport(C, X).matrix, C.matrix)


def test_make_congruence_rejects_singular():
    H = hilbert_space(2)
    with pytest.raises(NotInvertible):
        make_congruence(op(H, np.diag([1.0, 0.0])))


def test_make_congruence_rejects_ill_conditioned():
    H = hilbert_space(2)
    with pytest.raises(IllConditioned):
        make_congruence(op(H, np.diag([1.0, 1e-9])))


def test_make_congruence_rejects_rectangular():
    with pytest.raises(DimensionMismatch):
        make_congruence(KOperator(hilbert_space(2), hilbert_space(3),
                                  np.zeros((3, 2))))


def test_to_hilbert():
    H = make_space(J2)
    C = op(H, [[0, 1], [-1, 0]])
    D, X = to_hilbert(C)
    assert np.array_equal(D.domain.J, np.eye(2))
    assert np.allclose(D.matrix, H.J @ C.matrix)
    assert hermitian_indices(D) == hermitian_indices(C)
    assert np.allclose(transport(D, X).matrix, C.matrix, atol=1e-12)


def test_is_congruent_hilbert_counterexample():
    H = hilbert_space(2)
    A = op(H, np.diag([1.0, 1.0]))
    B = op(H, np.diag([1.0, -1.0]))
    assert not is_congruent(A, B)
    with pytest.raises(NotCongruent):
        build_congruence(A, B)


def test_is_congruent_requires_equal_dims():
    with pytest.raises(DimensionMismatch):
        is_congruent(op(hilbert_space(2), np.eye(2)),
                     op(hilbert_space(3), np.eye(3)))


def test_build_congruence_across_spaces():
    # same index triple on different symmetries must be congruent
    Ha = make_space(J2)
    Hb = hilbert_space(2)
    A = op(Ha, [[0, 1], [-1, 0]])
    B = op(Hb, np.diag([3.0, -5.0]))
    assert is_congruent(A, B)
    X = build_congruence(A, B)
    resid = A.matrix - transport(B, X).matrix
    scale = max(np.linalg.norm(A.matrix, 2), np.linalg.norm(B.matrix, 2))
    assert np.linalg.norm(resid, 2) <= 1e-8 * scale
    # X carries its exact inverse
    assert np.allclose(X.X.matrix @ X.X_inv.matrix, np.eye(2), atol=1e-10)


def test_build_congruence_with_kernels():
    H = hilbert_space(3)
    A = op(H, np.diag([2.0, 0.0, -1.0]))
    B = op(H, np.diag([0.0, 5.0, -0.5]))
    X = build_congruence(A, B)
    assert np.allclose(transport(B, X).matrix, A.matrix, atol=1e-10)
