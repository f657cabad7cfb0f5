import numpy as np
import pytest

from conftest import haar_matrix, random_state
from utp.operators import UnitaryOperator, haar_random_unitary, identity, omega, pauli
from utp.testers import (
    DensityMatrix,
    MesMeasurement,
    Povm,
    ProjectiveMeasurement,
    PureState,
    Tester,
    bell_basis,
    computational_basis,
    is_trivial_measurement,
    mes_state,
    outcome_distribution,
    povm_from_projective,
    tester_from_json,
    tester_to_json,
    trivial_tester,
)


def qubit_state(a, b):
    return PureState(np.array([a, b], dtype=complex))


# --- type invariants ---------------------------------------------------------

def test_pure_state_requires_unit_norm():
    with pytest.raises(ValueError, match="not normalized"):
        PureState(np.array([1.0, 1.0]))


def test_projective_requires_orthonormal():
    with pytest.raises(ValueError, match="orthonormal"):
        ProjectiveMeasurement((qubit_state(1, 0), qubit_state(np.sqrt(0.5), np.sqrt(0.5))))


def test_projective_requires_complete():
    with pytest.raises(ValueError, match="exactly d"):
        ProjectiveMeasurement((PureState(np.array([1.0, 0, 0])), PureState(np.array([0, 1.0, 0]))))


def test_density_matrix_invariants():
    with pytest.raises(ValueError, match="trace"):
        DensityMatrix(np.eye(2))
    with pytest.raises(ValueError, match="Hermitian"):
        DensityMatrix(np.array([[0.5, 0.5], [0.0, 0.5]]))
    with pytest.raises(ValueError, match="eigenvalue"):
        DensityMatrix(np.diag([1.5, -0.5]))


def test_povm_invariants():
    half = np.eye(2) / 2
    Povm((half, half))  # fine
    with pytest.raises(ValueError, match="sum to identity"):
        Povm((half, half / 2))
    with pytest.raises(ValueError, match="Hermitian"):
        Povm((np.array([[0.5, 0.5], [0.0, 0.5]]), np.array([[0.5, -0.5], [0.0, 0.5]])))
    with pytest.raises(ValueError, match="eigenvalue"):
        Povm((np.diag([1.5, 0.5]), np.diag([-0.5, 0.5])))


def test_mes_measurement_rejects_separable_basis():
    # the computational basis of C^4 is orthonormal but not entangled
    states = tuple(PureState(np.eye(4)[:, i]) for i in range(4))
    with pytest.raises(ValueError, match="maximally entangled"):
        MesMeasurement(2, states)


def test_tester_kind_consistency():
    m = computational_basis(2)
    with pytest.raises(ValueError, match="do not match kind"):
        Tester("povm", qubit_state(1, 0), m)
    with pytest.raises(ValueError, match="unknown tester kind"):
        Tester("weird", qubit_state(1, 0), m)


def test_mes_tester_requires_canonical_input():
    m = bell_basis(2)
    rotated = PureState(m.states[3].amplitudes)
    with pytest.raises(ValueError, match="canonical"):
        Tester("mes", rotated, m)


# --- outcome distributions ---------------------------------------------------

def test_outcomes_projective_identity():
    t = Tester.projective(qubit_state(1, 0), computational_basis(2))
    assert np.allclose(outcome_distribution(t, identity(2)).probs, [1, 0])


def test_outcomes_projective_flip():
    t = Tester.projective(qubit_state(1, 0), computational_basis(2))
    assert np.allclose(outcome_distribution(t, pauli("X")).probs, [0, 1])


def test_outcomes_projective_rotation():
    # (I - i sigma_y)/sqrt(2) |0> = (|0> + |1>)/sqrt(2), computed by hand
    t = Tester.projective(qubit_state(1, 0), computational_basis(2))
    assert np.allclose(outcome_distribution(t, omega(-1)).probs, [0.5, 0.5])


def test_outcomes_mes_contains_input():
    t = Tester.mes(bell_basis(2))
    assert np.allclose(outcome_distribution(t, identity(2)).probs, [1, 0, 0, 0])


def test_outcomes_sum_to_one_random():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        d = int(rng.integers(2, 5))
        m = ProjectiveMeasurement.from_matrix(haar_matrix(d, rng))
        t = Tester.projective(PureState(random_state(d, rng)), m)
        u = UnitaryOperator(haar_matrix(d, rng))
        p = outcome_distribution(t, u).probs
        assert abs(p.sum() - 1) < 1e-9
        assert p.min() >= 0


def test_projective_povm_agreement():
    rng = np.random.default_rng(11)
    for _ in range(100):
        d = int(rng.integers(2, 5))
        m = ProjectiveMeasurement.from_matrix(haar_matrix(d, rng))
        psi = PureState(random_state(d, rng))
        u = UnitaryOperator(haar_matrix(d, rng))
        p_proj = outcome_distribution(Tester.projective(psi, m), u).probs
        t_povm = Tester.povm(DensityMatrix.from_pure(psi), povm_from_projective(m))
        p_povm = outcome_distribution(t_povm, u).probs
        assert np.abs(p_proj - p_povm).max() < 1e-12


def test_mes_diagonal_overlap_law():
    # diagonal MES overlaps all equal |Tr(w v+)| / d, independent of the basis
    rng = np.random.default_rng(5)
    for trial in range(100):
        d = 2 if trial % 2 == 0 else 3
        v = UnitaryOperator(haar_matrix(d, rng))
        w = UnitaryOperator(haar_matrix(d, rng))
        a = np.kron(w.matrix @ v.matrix.conj().T, np.eye(d))
        x = bell_basis(d).matrix
        diag = np.abs(np.diag(x.conj().T @ a @ x))
        expected = abs(np.trace(w.matrix @ v.matrix.conj().T)) / d
        assert np.abs(diag - expected).max() < 1e-9
        assert diag.max() <= 1 + 1e-12


# --- mes_state / bell_basis --------------------------------------------------

def test_mes_state_d2():
    phi = mes_state(2).amplitudes
    assert np.allclose(phi, np.array([1, 0, 0, 1]) / np.sqrt(2))


def test_mes_state_reduced_is_maximally_mixed():
    for d in (2, 3):
        phi = mes_state(d).amplitudes.reshape(d, d)
        assert np.allclose(phi @ phi.conj().T, np.eye(d) / d)
        assert np.allclose(phi.conj().T @ phi, np.eye(d) / d)


def test_bell_basis_d2_states():
    basis = bell_basis(2)
    known = np.array(
        [
            [1, 0, 0, 1],  # (I x I) Phi
            [1, 0, 0, -1],  # (Z x I) Phi
            [0, 1, 1, 0],  # (X x I) Phi
            [0, 1, -1, 0],  # (XZ x I) Phi
        ],
        dtype=complex,
    ) / np.sqrt(2)
    for state, expect in zip(basis.states, known):
        assert abs(abs(np.vdot(state.amplitudes, expect)) - 1) < 1e-12


@pytest.mark.parametrize("d", [2, 3, 4])
def test_bell_basis_orthonormal_and_entangled(d):
    basis = bell_basis(d)
    x = basis.matrix
    assert np.abs(x.conj().T @ x - np.eye(d * d)).max() < 1e-12
    for n in basis.unitaries():
        assert np.abs(n.conj().T @ n - np.eye(d)).max() < 1e-12


# --- trivial testers ---------------------------------------------------------

def test_trivial_tester_sigma_y():
    t = trivial_tester(identity(2), pauli("Y"))
    expected = [np.array([1, 1j]) / np.sqrt(2), np.array([1, -1j]) / np.sqrt(2)]
    for state in t.measurement.states:
        overlaps = [abs(np.vdot(state.amplitudes, e)) for e in expected]
        assert max(overlaps) == pytest.approx(1.0, abs=1e-9)


def test_trivial_tester_identity_pair():
    t = trivial_tester(identity(2), identity(2))
    assert np.allclose(np.abs(t.measurement.matrix), np.eye(2))


def test_trivial_tester_sigma_z():
    # the sigma_z eigenbasis is the computational basis, up to order/phase
    t = trivial_tester(identity(2), pauli("Z"))
    magnitudes = np.abs(t.measurement.matrix)
    assert np.allclose(np.sort(magnitudes, axis=0), [[0, 0], [1, 1]], atol=1e-12)
    assert np.allclose(magnitudes @ magnitudes.T, np.eye(2), atol=1e-12)


def test_is_trivial_measurement_cases():
    eig_basis = trivial_tester(identity(2), pauli("Y")).measurement
    assert is_trivial_measurement(eig_basis, identity(2), pauli("Y"))
    assert not is_trivial_measurement(computational_basis(2), identity(2), pauli("Y"))
    phase_only = UnitaryOperator(np.exp(0.3j) * np.eye(2))
    assert is_trivial_measurement(eig_basis, identity(2), phase_only)
    assert is_trivial_measurement(computational_basis(2), identity(2), phase_only)


# --- serialization -----------------------------------------------------------

def test_tester_json_roundtrip_projective():
    m = ProjectiveMeasurement.from_matrix(haar_matrix(3, np.random.default_rng(0)))
    t = Tester.projective(m.states[1], m)
    again = tester_from_json(tester_to_json(t))
    assert again.kind == "projective"
    assert np.abs(again.input.amplitudes - t.input.amplitudes).max() < 1e-15
    assert np.abs(again.measurement.matrix - t.measurement.matrix).max() < 1e-15


def test_tester_json_roundtrip_mes():
    t = Tester.mes(bell_basis(2))
    again = tester_from_json(tester_to_json(t))
    assert again.kind == "mes"
    assert np.abs(again.measurement.matrix - t.measurement.matrix).max() < 1e-15


def test_tester_json_roundtrip_povm():
    rho = DensityMatrix(np.eye(2) / 2)
    t = Tester.povm(rho, povm_from_projective(computational_basis(2)))
    again = tester_from_json(tester_to_json(t))
    assert again.kind == "povm"
    assert np.abs(again.input.matrix - rho.matrix).max() < 1e-15


def test_tester_json_rejects_invariant_violation():
    t = Tester.projective(qubit_state(1, 0), computational_basis(2))
    text = tester_to_json(t).replace('"re": [1.0, 0.0]', '"re": [1.0, 1.0]', 1)
    with pytest.raises(ValueError, match="normalized|orthonormal"):
        tester_from_json(text)


def test_tester_json_rejects_malformed():
    with pytest.raises(ValueError, match="malformed JSON"):
        tester_from_json("{")
    with pytest.raises(ValueError, match="unknown tester kind"):
        tester_from_json('{"kind": "x", "input": {}, "measurement": {}}')


def test_trivial_tester_random_pairs():
    rng = np.random.default_rng(77)
    for k in range(10):
        d = int(rng.integers(2, 5))
        v = haar_random_unitary(d, seed=100 + k)
        w = haar_random_unitary(d, seed=200 + k)
        t = trivial_tester(v, w)
        assert is_trivial_measurement(t.measurement, v, w)
        pv = outcome_distribution(t, v).probs
        pw = outcome_distribution(t, w).probs
        assert pv.max() > 1 - 1e-12 and pw.max() > 1 - 1e-12
