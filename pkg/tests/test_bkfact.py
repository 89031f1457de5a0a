import numpy as np
import pytest

from kreinalg.bkfact import (BKFactorization, SignatureFactorization,
                             bk_factorize, bk_verify, contained_space,
                             keyth_verify)
from kreinalg.errors import (DimensionMismatch, NotSelfadjoint, NotSymmetry,
                             PreconditionFailed)
from kreinalg.krein import (KOperator, hilbert_space, k_adjoint, make_space,
                            space_indices)

J2 = np.diag([1.0, -1.0]).astype(complex)
INV_SQRT2 = 0.7071067811865476


def op(space, M):
    return KOperator(space, space, np.asarray(M, dtype=complex))


def c2_example():
    H = make_space(J2)
    return H, op(H, [[0, 1], [-1, 0]])


def test_factorize_c2_example():
    H, C = c2_example()
    F = bk_factorize(C)
    assert F.A_space.dim == 2
    assert space_indices(F.A_space) == (1, 1)
    # every entry of the factor has modulus 1/sqrt(2)
    assert np.allclose(np.abs(F.A.matrix), INV_SQRT2, atol=1e-12)
    prod = F.A.matrix @ k_adjoint(F.A).matrix
    assert np.allclose(prod, C.matrix, atol=1e-10)
    rep = bk_verify(C, F)
    assert rep["passed"]
    assert rep["product_residual"] <= 1e-10
    assert rep["injective"]
    assert rep["index_equality"]


def test_factorize_zero_operator():
    H = make_space(J2)
    C = op(H, np.zeros((2, 2)))
    F = bk_factorize(C)
    assert F.A_space.dim == 0
    assert F.A.matrix.shape == (2, 0)
    assert bk_verify(C, F)["passed"]


def test_factorize_identity_on_hilbert():
    H = hilbert_space(3)
    F = bk_factorize(op(H, np.eye(3)))
    assert np.allclose(F.A.matrix, np.eye(3), atol=1e-12)
    assert space_indices(F.A_space) == (3, 0)


def test_factorize_with_kernel():
    H = hilbert_space(3)
    C = op(H, np.diag([4.0, -9.0, 0.0]))
    F = bk_factorize(C)
    # kernel directions stay out of the factor space
    assert F.A_space.dim == 2
    assert space_indices(F.A_space) == (1, 1)
    rep = bk_verify(C, F)
    assert rep["passed"]
    assert rep["operator_indices"] == [1, 1, 1]


def test_factorize_requires_selfadjoint():
    H = make_space(J2)
    with pytest.raises(NotSelfadjoint):
        bk_factorize(op(H, [[0, 1], [1, 0]]))


def test_verify_flags_scaled_factor():
    H, C = c2_example()
    F = bk_factorize(C)
    bad = BKFactorization(A_space=F.A_space,
                          A=KOperator(F.A_space, H, 2.0 * F.A.matrix))
    rep = bk_verify(C, bad)
    assert not rep["passed"]
    assert rep["product_residual"] == pytest.approx(3.0, rel=1e-6)


def test_verify_flags_wrong_signature():
    # factor space with flipped signs cannot match the index triple
    H = hilbert_space(2)
    C = op(H, np.diag([1.0, 2.0]))
    A_space = make_space(J2)
    A = KOperator(A_space, H, np.diag([1.0, np.sqrt(2.0)]).astype(complex))
    rep = bk_verify(C, BKFactorization(A_space=A_space, A=A))
    assert not rep["index_equality"]
    assert not rep["passed"]


def test_verify_dimension_mismatch():
    H, C = c2_example()
    F = bk_factorize(op(hilbert_space(3), np.eye(3)))
    with pytest.raises(DimensionMismatch):
        bk_verify(C, F)


def test_contained_space_gram_inertia():
    H, C = c2_example()
    cs = contained_space(C)
    assert cs.basis.shape == (2, 2)
    from kreinalg.densela import inertia
    assert inertia(cs.gram) == (1, 1, 0)


def test_contained_space_with_kernel():
    H = hilbert_space(3)
    cs = contained_space(op(H, np.diag([4.0, -9.0, 0.0])))
    assert cs.basis.shape == (3, 2)
    from kreinalg.densela import inertia
    assert inertia(cs.gram) == (1, 1, 0)


def sig_fact(n, J_A_diag, T_mat):
    E = hilbert_space(n)
    return E, SignatureFactorization(
        K_space=E,
        J_A=op(E, np.diag(J_A_diag)),
        T=KOperator(E, E, np.asarray(T_mat, dtype=complex)))


def test_keyth_verify_diagonal():
    E, S = sig_fact(2, [1.0, -1.0], np.diag([np.sqrt(2.0), np.sqrt(3.0)]))
    C = op(E, np.diag([2.0, -3.0]))
    rep = keyth_verify(C, S)
    assert rep["passed"]
    assert rep["reconstruction_residual"] <= 1e-12
    assert rep["kernel_trivial"] and rep["range_dense"]
    assert rep["operator_indices"] == [1, 1, 0]
    assert rep["signature_indices"] == [1, 1]


def test_keyth_verify_flags_wrong_signature():
    E, S = sig_fact(2, [1.0, 1.0], np.diag([np.sqrt(2.0), np.sqrt(3.0)]))
    C = op(E, np.diag([2.0, -3.0]))
    rep = keyth_verify(C, S)
    assert not rep["index_equality"]
    assert not rep["passed"]


def test_keyth_verify_reports_deficient_range():
    # T maps into a larger space without covering it
    E3 = hilbert_space(3)
    E2 = hilbert_space(2)
    T = KOperator(E2, E3, np.array([[1.0, 0.0], [0.0, 1.0], [0.0, 0.0]],
                                   dtype=complex))
    S = SignatureFactorization(K_space=E3, J_A=op(E3, np.eye(3)), T=T)
    C = op(E2, np.eye(2))
    rep = keyth_verify(C, S)
    assert rep["kernel_trivial"]
    assert not rep["range_dense"]
    assert not rep["passed"]


def test_keyth_verify_preconditions():
    K, C = c2_example()
    E, S = sig_fact(2, [1.0, -1.0], np.eye(2))
    with pytest.raises(PreconditionFailed, match="Hilbert"):
        keyth_verify(C, S)                       # operator space is indefinite
    singular = op(E, np.diag([1.0, 0.0]))
    with pytest.raises(PreconditionFailed, match="kernel"):
        keyth_verify(singular, S)


def test_signature_factorization_validates():
    E = hilbert_space(2)
    with pytest.raises(NotSymmetry):
        SignatureFactorization(K_space=make_space(J2),  # not a Hilbert space
                               J_A=op(make_space(J2), np.eye(2)),
                               T=op(make_space(J2), np.eye(2)))
    with pytest.raises(NotSymmetry):
        SignatureFactorization(K_space=E, J_A=op(E, np.diag([1.0, 2.0])),
                               T=op(E, np.eye(2)))
