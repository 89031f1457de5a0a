import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kreinalg.densela import (Tolerance, herm_eig, inertia, null_basis, pinv,
                              psd_sqrt, spectral_norm, svd)
from kreinalg.errors import InputError, NotHermitian, NotPSD

# sqrt of [[2,1],[1,2]] by hand: eigenpairs (3, (1,1)/sqrt2), (1, (1,-1)/sqrt2)
SQRT3P1_HALF = 1.3660254037844386
SQRT3M1_HALF = 0.3660254037844386


def test_tolerance_defaults():
    t = Tolerance()
    assert t.rank_tol == 1e-10
    assert t.residual_tol == 1e-8


@pytest.mark.parametrize("kwargs", [
    {"rank_tol": 0.0},
    {"rank_tol": -1e-10},
    {"residual_tol": 0.1},          # above the 1e-2 ceiling
    {"residual_tol": 0.0},
])
def test_tolerance_rejects(kwargs):
    with pytest.raises(InputError):
        Tolerance(**kwargs)


def test_tolerance_ceiling_inclusive():
    Tolerance(rank_tol=1e-2, residual_tol=1e-2)


def test_spectral_norm():
    assert spectral_norm(np.diag([3.0, -4.0])) == pytest.approx(4.0)
    assert spectral_norm(np.zeros((0, 3))) == 0.0
    assert spectral_norm(np.zeros((2, 2))) == 0.0


def test_herm_eig_sorted_ascending():
    eig = herm_eig(np.diag([5.0, -2.0, 1.0]))
    assert np.allclose(eig.eigenvalues, [-2.0, 1.0, 5.0])
    V = eig.eigenvectors
    assert np.allclose(V.conj().T @ V, np.eye(3), atol=1e-12)


def test_herm_eig_rejects_nonhermitian():
    with pytest.raises(NotHermitian):
        herm_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))


@pytest.mark.parametrize("diag,expected", [
    ([4.0, -9.0, 0.0], (1, 1, 1)),
    ([1.0, 1.0], (2, 0, 0)),
    ([0.0, 0.0], (0, 0, 2)),
    ([-2.0], (0, 1, 0)),
])
def test_inertia_diagonal(diag, expected):
    assert inertia(np.diag(diag)) == expected


def test_inertia_offdiagonal():
    # eigenvalues +1 and -1
    assert inertia(np.array([[0.0, 1.0], [1.0, 0.0]])) == (1, 1, 0)


def test_inertia_relative_band():
    # 1e-6 is far above rank_tol * norm, must count as nonzero
    assert inertia(np.diag([1.0, 1e-6])) == (2, 0, 0)
    # but 1e-12 relative to norm 1 sits inside the zero band
    assert inertia(np.diag([1.0, 1e-12])) == (1, 0, 1)


@settings(derandomize=True, max_examples=40)
@given(st.lists(st.floats(-10, 10, allow_nan=False), min_size=1, max_size=6))
def test_inertia_negation_swaps(diag):
    M = np.diag(np.array(diag))
    p, m, z = inertia(M)
    assert inertia(-M) == (m, p, z)
    assert p + m + z == len(diag)


def test_psd_sqrt_oracle():
    M = np.array([[2.0, 1.0], [1.0, 2.0]])
    R = psd_sqrt(M)
    expected = np.array([[SQRT3P1_HALF, SQRT3M1_HALF],
                         [SQRT3M1_HALF, SQRT3P1_HALF]])
    assert np.allclose(R, expected, atol=1e-12)
    assert np.allclose(R @ R, M, atol=1e-12)


def test_psd_sqrt_rejects_indefinite():
    with pytest.raises(NotPSD):
        psd_sqrt(np.diag([1.0, -1.0]))


def test_psd_sqrt_scale_hint():
    # a defect that cancelled to round-off: zero up to -1e-15
    M = np.diag([-1e-15])
    with pytest.raises(NotPSD):
        psd_sqrt(M)
    assert np.allclose(psd_sqrt(M, scale=1.0), [[0.0]])


def test_null_basis():
    N = null_basis(np.diag([1.0, 0.0]))
    assert N.shape == (2, 1)
    assert abs(N[1, 0]) == pytest.approx(1.0)
    assert np.allclose(np.diag([1.0, 0.0]) @ N, 0.0, atol=1e-12)


def test_null_basis_empty_shapes():
    assert null_basis(np.zeros((0, 3))).shape == (3, 3)
    assert null_basis(np.zeros((3, 0))).shape == (0, 0)
    assert null_basis(np.zeros((2, 2))).shape == (2, 2)
    assert null_basis(np.eye(4)).shape == (4, 0)


def test_pinv_oracle():
    P = pinv(np.diag([2.0, 0.0]))
    assert np.allclose(P, np.diag([0.5, 0.0]), atol=1e-12)


def test_pinv_moore_penrose():
    rng = np.random.default_rng(7)
    A = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
    P = pinv(A)
    assert np.allclose(A @ P @ A, A, atol=1e-10)
    assert np.allclose(P @ A @ P, P, atol=1e-10)
    assert np.allclose((A @ P).conj().T, A @ P, atol=1e-10)
    assert np.allclose((P @ A).conj().T, P @ A, atol=1e-10)


def test_svd_reconstructs():
    rng = np.random.default_rng(11)
    A = rng.standard_normal((3, 5)) + 1j * rng.standard_normal((3, 5))
    U, s, V = svd(A)
    assert np.allclose(U @ np.diag(s) @ V.conj().T, A, atol=1e-10)
    assert np.all(np.diff(s) <= 0)
