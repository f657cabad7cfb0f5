import math

import numpy as np
import pytest

from conftest import haar_matrix, random_state
from utp.operators import UnitaryOperator, identity, omega, pauli
from utp.saturation import su2_basis
from utp.testers import (
    DensityMatrix,
    Povm,
    ProjectiveMeasurement,
    PureState,
    Tester,
    bell_basis,
    computational_basis,
    povm_from_projective,
    trivial_tester,
)
from utp.uncertainty import (
    OutcomeDistribution,
    mes_bound,
    pair_uncertainty,
    povm_bound,
    projective_bound,
    shannon_entropy,
    variance_uncertainty,
)


def test_shannon_entropy_values():
    assert shannon_entropy([1.0, 0.0]).value == 0.0
    assert shannon_entropy([0.5, 0.5]).value == pytest.approx(1.0)
    assert shannon_entropy([0.25] * 4).value == pytest.approx(2.0)
    assert shannon_entropy([0.5, 0.5], base=math.e).value == pytest.approx(math.log(2))


def test_outcome_distribution_validation():
    with pytest.raises(ValueError, match="sum"):
        OutcomeDistribution(np.array([0.5, 0.4]))
    with pytest.raises(ValueError, match="outside"):
        OutcomeDistribution(np.array([1.5, -0.5]))
    # tiny negatives are clamped
    p = OutcomeDistribution(np.array([1.0 + 1e-13, -1e-13]))
    assert p.probs.min() == 0.0


def test_pair_uncertainty_distinguishable_pair():
    t = Tester.projective(PureState(np.array([1.0, 0])), computational_basis(2))
    assert pair_uncertainty(t, identity(2), pauli("X")).value == pytest.approx(0.0, abs=1e-12)


def test_pair_uncertainty_equator_tester():
    m = su2_basis(np.pi / 4, 0.0)
    t = Tester.projective(m.states[0], m)
    assert pair_uncertainty(t, identity(2), omega(-1)).value == pytest.approx(1.0, abs=1e-12)


def test_pair_uncertainty_trivial_tester():
    t = trivial_tester(identity(2), pauli("Y"))
    assert pair_uncertainty(t, identity(2), pauli("Y")).value == pytest.approx(0.0, abs=1e-9)


def test_projective_bound_computational():
    b = projective_bound(computational_basis(2), identity(2), pauli("X"))
    assert b.value == pytest.approx(0.0, abs=1e-12)
    assert b.argmax == (0, 1)
    assert b.max_overlap == pytest.approx(1.0)


def test_projective_bound_equator():
    b = projective_bound(su2_basis(np.pi / 4, 0.0), identity(2), omega(-1))
    assert b.value == pytest.approx(1.0, abs=1e-9)


def test_projective_bound_sigma_y_quarter():
    b = projective_bound(su2_basis(np.pi / 4, np.pi / 4), identity(2), pauli("Y"))
    assert b.value == pytest.approx(1.0, abs=1e-9)


def test_mes_bound_identity():
    b = mes_bound(bell_basis(2), identity(2), identity(2))
    assert b.value == pytest.approx(0.0, abs=1e-12)
    assert b.argmax == (0, 0)


def test_mes_bound_pauli_x_permutes_bell():
    b = mes_bound(bell_basis(2), identity(2), pauli("X"))
    assert b.value == pytest.approx(0.0, abs=1e-12)


def test_mes_bound_quarter_turn():
    b = mes_bound(bell_basis(2), identity(2), omega(-1))
    assert b.value == pytest.approx(1.0, abs=1e-9)
    assert b.max_overlap == pytest.approx(0.5, abs=1e-12)


def test_povm_bound_projective_reduction():
    m = povm_from_projective(computational_basis(2))
    assert povm_bound(m, identity(2), pauli("X")).value == pytest.approx(0.0, abs=1e-9)


def test_povm_bound_equator():
    m = povm_from_projective(su2_basis(np.pi / 4, 0.0))
    assert povm_bound(m, identity(2), omega(-1)).value == pytest.approx(1.0, abs=1e-9)


def test_povm_bound_trivial_povm():
    # sqrt(I/2) sqrt(I/2) has operator norm 1/2: bound is 2 bits in d = 2
    m = Povm((np.eye(2) / 2, np.eye(2) / 2))
    assert povm_bound(m, identity(2), omega(-1)).value == pytest.approx(2.0, abs=1e-12)


def test_variance_uncertainty():
    plus = PureState(np.array([1.0, 1.0]) / np.sqrt(2))
    # the square root turns an O(eps) overlap defect into O(sqrt(eps))
    assert variance_uncertainty(identity(2), plus) == pytest.approx(0.0, abs=1e-7)
    assert variance_uncertainty(pauli("X"), PureState(np.array([1.0, 0]))) == pytest.approx(1.0)
    assert variance_uncertainty(pauli("Z"), plus) == pytest.approx(1.0)


def test_bound_inequality_random():
    rng = np.random.default_rng(314)
    for d in (2, 3, 4):
        for _ in range(200):
            m = ProjectiveMeasurement.from_matrix(haar_matrix(d, rng))
            t = Tester.projective(PureState(random_state(d, rng)), m)
            v = UnitaryOperator(haar_matrix(d, rng))
            w = UnitaryOperator(haar_matrix(d, rng))
            b = projective_bound(m, v, w)
            assert pair_uncertainty(t, v, w).value - b.value >= -1e-9
            assert -1e-12 <= b.value <= math.log2(d) + 1e-12


def test_bound_swap_symmetry():
    rng = np.random.default_rng(15)
    for _ in range(50):
        d = int(rng.integers(2, 5))
        m = ProjectiveMeasurement.from_matrix(haar_matrix(d, rng))
        v = UnitaryOperator(haar_matrix(d, rng))
        w = UnitaryOperator(haar_matrix(d, rng))
        assert projective_bound(m, v, w).value == pytest.approx(
            projective_bound(m, w, v).value, abs=1e-12
        )


def test_povm_projective_consistency_random():
    rng = np.random.default_rng(99)
    for _ in range(20):
        d = int(rng.integers(2, 4))
        m = ProjectiveMeasurement.from_matrix(haar_matrix(d, rng))
        v = UnitaryOperator(haar_matrix(d, rng))
        w = UnitaryOperator(haar_matrix(d, rng))
        assert povm_bound(povm_from_projective(m), v, w).value == pytest.approx(
            projective_bound(m, v, w).value, abs=1e-9
        )


def test_bound_unitary_covariance():
    rng = np.random.default_rng(21)
    for _ in range(20):
        d = int(rng.integers(2, 5))
        m = ProjectiveMeasurement.from_matrix(haar_matrix(d, rng))
        v = UnitaryOperator(haar_matrix(d, rng))
        w = UnitaryOperator(haar_matrix(d, rng))
        u = haar_matrix(d, rng)
        rotated_m = ProjectiveMeasurement.from_matrix(u @ m.matrix)
        uv = UnitaryOperator(u @ v.matrix)
        uw = UnitaryOperator(u @ w.matrix)
        assert projective_bound(rotated_m, uv, uw).value == pytest.approx(
            projective_bound(m, v, w).value, abs=1e-12
        )


def test_povm_bound_validates_dimensions():
    m = povm_from_projective(computational_basis(2))
    with pytest.raises(ValueError, match="dimension mismatch"):
        povm_bound(m, identity(3), identity(3))


def test_pair_uncertainty_povm_matches_projective():
    rng = np.random.default_rng(4)
    m = ProjectiveMeasurement.from_matrix(haar_matrix(3, rng))
    psi = PureState(random_state(3, rng))
    v = UnitaryOperator(haar_matrix(3, rng))
    w = UnitaryOperator(haar_matrix(3, rng))
    t1 = Tester.projective(psi, m)
    t2 = Tester.povm(DensityMatrix.from_pure(psi), povm_from_projective(m))
    assert pair_uncertainty(t1, v, w).value == pytest.approx(
        pair_uncertainty(t2, v, w).value, abs=1e-9
    )
