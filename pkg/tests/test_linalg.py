import numpy as np
import pytest

from utp import linalg

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)
I2 = np.eye(2, dtype=complex)


def test_matmul_identity_and_involution():
    assert np.allclose(linalg.matmul(I2, SX), SX)
    assert np.allclose(linalg.matmul(SX, SX), I2)


def test_matmul_hand_product():
    # sigma_x sigma_z worked out entry by entry
    assert np.allclose(linalg.matmul(SX, SZ), np.array([[0, -1], [1, 0]]))


def test_matmul_dimension_mismatch():
    with pytest.raises(ValueError, match="dimension mismatch"):
        linalg.matmul(np.eye(2), np.eye(3))


def test_adjoint():
    assert np.allclose(linalg.adjoint(SY), SY)
    assert np.allclose(linalg.adjoint(np.diag([1j, 1])), np.diag([-1j, 1]))
    rng = np.random.default_rng(1)
    a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
    assert np.allclose(linalg.adjoint(linalg.adjoint(a)), a)


def test_rejects_nonfinite():
    with pytest.raises(ValueError, match="finite"):
        linalg.as_complex_matrix(np.array([[np.nan, 0], [0, 1]]))
    with pytest.raises(ValueError, match="finite"):
        linalg.as_complex_vector(np.array([np.inf, 0]))


def test_eig_unitary_sigma_z():
    by_value = {round(lam.real): vec for lam, vec in linalg.eig_unitary(SZ)}
    assert set(by_value) == {1, -1}
    assert np.allclose(np.abs(by_value[1]), [1, 0])
    assert np.allclose(np.abs(by_value[-1]), [0, 1])


def test_eig_unitary_sigma_y_eigenequation():
    # oracle: check U v = lambda v by direct multiplication
    pairs = linalg.eig_unitary(SY)
    for lam, vec in pairs:
        assert np.allclose(SY @ vec, lam * vec, atol=1e-12)
    values = sorted(lam.real for lam, _ in pairs)
    assert np.allclose(values, [-1, 1], atol=1e-12)
    assert all(abs(lam.imag) < 1e-12 for lam, _ in pairs)


def test_eig_unitary_quarter_turn():
    # (I - i sigma_y)/sqrt(2) diagonalizes in the sigma_y eigenbasis with
    # eigenvalues exp(-/+ i pi/4)
    u = (I2 - 1j * SY) / np.sqrt(2)
    values = np.array([lam for lam, _ in linalg.eig_unitary(u)])
    expected = np.exp(np.array([-1j, 1j]) * np.pi / 4)
    assert np.allclose(values[np.argsort(values.imag)], expected, atol=1e-12)


def test_eig_unitary_rejects_non_unitary():
    with pytest.raises(ValueError, match="not unitary"):
        linalg.eig_unitary(np.array([[1, 1], [0, 1]], dtype=complex))


@pytest.mark.parametrize("d", [2, 3, 5, 8])
def test_eig_unitary_random_reconstruction(d):
    rng = np.random.default_rng(d)
    z = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(z)
    u = q * (np.diag(r) / np.abs(np.diag(r))).conj()[None, :]
    pairs = linalg.eig_unitary(u)
    rebuilt = sum(lam * np.outer(vec, vec.conj()) for lam, vec in pairs)
    assert np.abs(rebuilt - u).max() < 1e-8
    for lam, _ in pairs:
        assert abs(abs(lam) - 1) < 1e-9


def test_eig_unitary_degenerate_identity():
    pairs = linalg.eig_unitary(np.eye(3, dtype=complex))
    basis = np.column_stack([vec for _, vec in pairs])
    assert np.allclose(basis.conj().T @ basis, np.eye(3), atol=1e-12)
    assert np.allclose([lam for lam, _ in pairs], [1, 1, 1])


def test_operator_norm():
    assert linalg.operator_norm(SY) == pytest.approx(1.0, abs=1e-12)
    proj = np.array([[1, 0], [0, 0]], dtype=complex)
    assert linalg.operator_norm(proj) == pytest.approx(1.0, abs=1e-12)
    assert linalg.operator_norm(np.diag([3, 4j])) == pytest.approx(4.0, abs=1e-12)


def test_operator_norm_unitary_invariance():
    rng = np.random.default_rng(7)
    for _ in range(10):
        a = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        qu, _ = np.linalg.qr(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        qv, _ = np.linalg.qr(rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)))
        assert linalg.operator_norm(qu @ a @ qv) == pytest.approx(
            linalg.operator_norm(a), abs=1e-9
        )


def test_psd_sqrt_basic():
    assert np.allclose(linalg.psd_sqrt(I2), I2)
    proj = np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex)
    assert np.allclose(linalg.psd_sqrt(proj), proj, atol=1e-12)
    assert np.allclose(linalg.psd_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]))


def test_psd_sqrt_random_roundtrip():
    rng = np.random.default_rng(5)
    for _ in range(10):
        b = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        m = b @ b.conj().T
        root = linalg.psd_sqrt(m)
        assert np.abs(root @ root - m).max() < 1e-9 * max(1.0, np.abs(m).max())
        assert linalg.is_hermitian(root, 1e-10)


def test_psd_sqrt_rejects_bad_input():
    with pytest.raises(ValueError, match="Hermitian"):
        linalg.psd_sqrt(np.array([[0, 1], [0, 0]], dtype=complex))
    with pytest.raises(ValueError, match="eigenvalue"):
        linalg.psd_sqrt(np.diag([1.0, -0.5]))


def test_trace_kron_inner_norm():
    assert linalg.trace(np.eye(5)) == pytest.approx(5.0)
    assert np.allclose(linalg.kron(I2, I2), np.eye(4))
    assert linalg.inner([1, 0], [0, 1]) == 0
    # conjugate-linear in the first argument
    assert linalg.inner([1j, 0], [1, 0]) == pytest.approx(-1j)
    assert linalg.norm([3, 4]) == pytest.approx(5.0)
