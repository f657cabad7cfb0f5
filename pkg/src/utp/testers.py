"""Testers: an input state paired with a measurement, and their statistics.

A tester probes an unknown unitary by sending a known state through it
and measuring the output.  Three flavors are supported:

* ``projective`` -- pure input state, orthonormal projective basis;
* ``mes`` -- canonical maximally entangled input on H_d (x) H_d, measured
  in a basis of maximally entangled states (any other MES input is
  equivalent to the canonical one after absorbing its defining unitary
  into the measurement);
* ``povm`` -- density-matrix input, POVM measurement.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    as_complex_matrix,
    as_complex_vector,
    eig_unitary,
    is_hermitian,
)
from .operators import UnitaryOperator, matrix_from_literal, matrix_to_literal

POVM_SUM_TOL = 1e-8  # element sums accumulate error over d^2 terms
MES_RESHAPE_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm state vector."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        a = as_complex_vector(self.amplitudes)
        n = np.linalg.norm(a)
        if abs(n - 1.0) > DEFAULT_TOL:
            raise ValueError(f"state is not normalized: |norm - 1| = {abs(n - 1):.3e}")
        a = a.copy()
        a.flags.writeable = False
        object.__setattr__(self, "amplitudes", a)

    @property
    def dim(self) -> int:
        return self.amplitudes.size


@dataclass(frozen=True, eq=False)
class ProjectiveMeasurement:
    """Complete orthonormal basis of rank-1 projectors."""

    states: tuple[PureState, ...]

    def __post_init__(self) -> None:
        states = tuple(self.states)
        if not states:
            raise ValueError("measurement needs at least one basis state")
        d = states[0].dim
        if len(states) != d or any(s.dim != d for s in states):
            raise ValueError(f"projective measurement needs exactly d={d} states of dimension d")
        x = self.matrix_of(states)
        gram = x.conj().T @ x
        dev = np.abs(gram - np.eye(d)).max()
        if dev > DEFAULT_TOL:
            raise ValueError(f"measurement basis is not orthonormal: deviation {dev:.3e}")
        object.__setattr__(self, "states", states)

    @staticmethod
    def matrix_of(states) -> np.ndarray:
        return np.column_stack([s.amplitudes for s in states])

    @property
    def dim(self) -> int:
        return self.states[0].dim

    @property
    def matrix(self) -> np.ndarray:
        """Unitary whose columns are the basis states."""
        return self.matrix_of(self.states)

    @classmethod
    def from_matrix(cls, x) -> "ProjectiveMeasurement":
        x = as_complex_matrix(x)
        return cls(tuple(PureState(x[:, i]) for i in range(x.shape[1])))


def computational_basis(d: int) -> ProjectiveMeasurement:
    return ProjectiveMeasurement.from_matrix(np.eye(d, dtype=complex))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian PSD operator of unit trace."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = as_complex_matrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise ValueError("density matrix must be square")
        if not is_hermitian(m, DEFAULT_TOL):
            raise ValueError("density matrix is not Hermitian")
        if abs(np.trace(m).real - 1.0) > DEFAULT_TOL or abs(np.trace(m).imag) > DEFAULT_TOL:
            raise ValueError(f"density matrix trace {np.trace(m):.6g} != 1")
        lo = np.linalg.eigvalsh(m).min()
        if lo < -DEFAULT_TOL:
            raise ValueError(f"density matrix has eigenvalue {lo:.3e} < 0")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @classmethod
    def from_pure(cls, psi: PureState) -> "DensityMatrix":
        a = psi.amplitudes
        return cls(np.outer(a, a.conj()))


@dataclass(frozen=True, eq=False)
class Povm:
    """Positive operator-valued measure: Hermitian PSD elements summing to I."""

    elements: tuple[np.ndarray, ...]

    def __post_init__(self) -> None:
        elements = tuple(as_complex_matrix(e) for e in self.elements)
        if not elements:
            raise ValueError("POVM needs at least one element")
        d = elements[0].shape[0]
        total = np.zeros((d, d), dtype=complex)
        frozen = []
        for e in elements:
            if e.shape != (d, d):
                raise ValueError("POVM elements must share one square shape")
            if not is_hermitian(e, DEFAULT_TOL):
                raise ValueError("POVM element is not Hermitian")
            lo = np.linalg.eigvalsh(e).min()
            if lo < -DEFAULT_TOL:
                raise ValueError(f"POVM element has eigenvalue {lo:.3e} < 0")
            total += e
            e = e.copy()
            e.flags.writeable = False
            frozen.append(e)
        dev = np.abs(total - np.eye(d)).max()
        if dev > POVM_SUM_TOL:
            raise ValueError(f"POVM elements do not sum to identity: deviation {dev:.3e}")
        object.__setattr__(self, "elements", tuple(frozen))

    @property
    def dim(self) -> int:
        return self.elements[0].shape[0]


def povm_from_projective(m: ProjectiveMeasurement) -> Povm:
    """Rank-1 POVM with elements |chi_i><chi_i|."""
    return Povm(tuple(np.outer(s.amplitudes, s.amplitudes.conj()) for s in m.states))


@dataclass(frozen=True, eq=False)
class MesMeasurement:
    """Orthonormal basis of d^2 maximally entangled bipartite states.

    Each basis vector, reshaped to a d x d matrix C, must satisfy that
    sqrt(d) * C is unitary.
    """

    local_dim: int
    states: tuple[PureState, ...]

    def __post_init__(self) -> None:
        d = int(self.local_dim)
        states = tuple(self.states)
        if d < 2:
            raise ValueError("local dimension must be >= 2")
        if len(states) != d * d or any(s.dim != d * d for s in states):
            raise ValueError(f"MES measurement needs d^2={d * d} states of dimension d^2")
        x = np.column_stack([s.amplitudes for s in states])
        dev = np.abs(x.conj().T @ x - np.eye(d * d)).max()
        if dev > DEFAULT_TOL:
            raise ValueError(f"MES basis is not orthonormal: deviation {dev:.3e}")
        for s in states:
            n = s.amplitudes.reshape(d, d) * math.sqrt(d)
            if np.abs(n.conj().T @ n - np.eye(d)).max() > MES_RESHAPE_TOL:
                raise ValueError("MES basis element is not maximally entangled")
        object.__setattr__(self, "local_dim", d)
        object.__setattr__(self, "states", states)

    @property
    def dim(self) -> int:
        return self.local_dim * self.local_dim

    @property
    def matrix(self) -> np.ndarray:
        return np.column_stack([s.amplitudes for s in self.states])

    def unitaries(self) -> list[np.ndarray]:
        """The unitaries N_i with |nu_i> = (N_i (x) I)|Phi>."""
        d = self.local_dim
        return [s.amplitudes.reshape(d, d) * math.sqrt(d) for s in self.states]

    @classmethod
    def from_unitaries(cls, ops) -> "MesMeasurement":
        ops = [as_complex_matrix(o) for o in ops]
        d = ops[0].shape[0]
        phi = mes_state(d).amplitudes
        states = tuple(PureState(np.kron(o, np.eye(d)) @ phi) for o in ops)
        return cls(d, states)


@dataclass(frozen=True, eq=False)
class Tester:
    """A pair (input state, measurement); kind selects the flavor."""

    kind: str
    input: PureState | DensityMatrix
    measurement: ProjectiveMeasurement | MesMeasurement | Povm

    def __post_init__(self) -> None:
        kind = self.kind
        if kind == "projective":
            ok = isinstance(self.input, PureState) and isinstance(
                self.measurement, ProjectiveMeasurement
            )
        elif kind == "mes":
            ok = isinstance(self.input, PureState) and isinstance(
                self.measurement, MesMeasurement
            )
        elif kind == "povm":
            ok = isinstance(self.input, DensityMatrix) and isinstance(self.measurement, Povm)
        else:
            raise ValueError(f"unknown tester kind {kind!r}")
        if not ok:
            raise ValueError(f"input/measurement types do not match kind {kind!r}")
        if self.input.dim != self.measurement.dim:
            raise ValueError(
                f"input dimension {self.input.dim} != measurement dimension {self.measurement.dim}"
            )
        if kind == "mes":
            d = self.measurement.local_dim
            if np.abs(self.input.amplitudes - mes_state(d).amplitudes).max() > DEFAULT_TOL:
                raise ValueError("mes tester input must be the canonical MES")

    @property
    def dim(self) -> int:
        """Dimension of the tested operator (local dimension for mes kind)."""
        if self.kind == "mes":
            return self.measurement.local_dim
        return self.input.dim

    @classmethod
    def projective(cls, state: PureState, m: ProjectiveMeasurement) -> "Tester":
        return cls("projective", state, m)

    @classmethod
    def mes(cls, m: MesMeasurement) -> "Tester":
        return cls("mes", mes_state(m.local_dim), m)

    @classmethod
    def povm(cls, rho: DensityMatrix, m: Povm) -> "Tester":
        return cls("povm", rho, m)


def mes_state(d: int) -> PureState:
    """Canonical maximally entangled state (1/sqrt(d)) sum_i |ii>."""
    if d < 2:
        raise ValueError("local dimension must be >= 2")
    phi = np.zeros(d * d, dtype=complex)
    phi[:: d + 1] = 1 / math.sqrt(d)
    return PureState(phi)


def bell_basis(d: int) -> MesMeasurement:
    """Weyl-Heisenberg MES basis {(X^a Z^b (x) I)|Phi>} for a, b in 0..d-1.

    X is the cyclic shift |j> -> |j+1 mod d| and Z = diag(exp(2 pi i j / d)).
    For d = 2 these are the four Bell states.
    """
    if d < 2:
        raise ValueError("local dimension must be >= 2")
    shift = np.roll(np.eye(d, dtype=complex), 1, axis=0)
    phase = np.diag(np.exp(2j * np.pi * np.arange(d) / d))
    ops = []
    for a in range(d):
        for b in range(d):
            ops.append(np.linalg.matrix_power(shift, a) @ np.linalg.matrix_power(phase, b))
    return MesMeasurement.from_unitaries(ops)


def outcome_distribution(t: Tester, u: UnitaryOperator):
    """Outcome probabilities of tester ``t`` applied to the unitary ``u``.

    projective: p_i = |<chi_i| U |psi>|^2
    mes:        p_i = |<nu_i| (U (x) I) |Phi>|^2
    povm:       p_k = Tr(M_k U rho U†)
    """
    from .uncertainty import OutcomeDistribution

    if t.dim != u.dim:
        raise ValueError(f"dimension mismatch: tester {t.dim} vs operator {u.dim}")
    if t.kind == "projective":
        amps = t.measurement.matrix.conj().T @ (u.matrix @ t.input.amplitudes)
        p = np.abs(amps) ** 2
    elif t.kind == "mes":
        evolved = np.kron(u.matrix, np.eye(u.dim)) @ t.input.amplitudes
        amps = t.measurement.matrix.conj().T @ evolved
        p = np.abs(amps) ** 2
    else:
        rotated = u.matrix @ t.input.matrix @ u.matrix.conj().T
        p = np.array([np.trace(e @ rotated).real for e in t.measurement.elements])
    return OutcomeDistribution(p)


def trivial_tester(v: UnitaryOperator, w: UnitaryOperator) -> Tester:
    """The zero-uncertainty tester whose measurement diagonalizes w v†.

    The measurement basis is an orthonormal eigenbasis of w v† and the
    input is v† applied to its first eigenvector, so both operators send
    the input onto a single measurement outcome and the pair uncertainty
    vanishes.  Useless for telling v from w, which is why such testers
    are excluded from saturation searches.
    """
    if v.dim != w.dim:
        raise ValueError(f"dimension mismatch: {v.dim} vs {w.dim}")
    pairs = eig_unitary(w.matrix @ v.matrix.conj().T)
    basis = ProjectiveMeasurement.from_matrix(np.column_stack([vec for _, vec in pairs]))
    psi = PureState(v.matrix.conj().T @ pairs[0][1])
    return Tester.projective(psi, basis)


def is_trivial_measurement(
    m: ProjectiveMeasurement,
    v: UnitaryOperator,
    w: UnitaryOperator,
    tol: float = DEFAULT_TOL,
) -> bool:
    """True iff every basis vector of ``m`` is an eigenvector of w v† within tol."""
    if m.dim != v.dim or v.dim != w.dim:
        raise ValueError("dimension mismatch between measurement and operators")
    a = w.matrix @ v.matrix.conj().T
    for s in m.states:
        chi = s.amplitudes
        image = a @ chi
        residual = image - np.vdot(chi, image) * chi
        if np.linalg.norm(residual) >= tol:
            return False
    return True


# --- JSON serialization ----------------------------------------------------

def _vector_to_literal(v: np.ndarray) -> dict:
    v = as_complex_vector(v)
    return {"dim": v.size, "re": v.real.tolist(), "im": v.imag.tolist()}


def _vector_from_literal(data: dict) -> np.ndarray:
    try:
        d = int(data["dim"])
        v = np.array(data["re"], dtype=float) + 1j * np.array(data["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed vector literal: {exc}") from exc
    return as_complex_vector(v, dim=d)


def tester_to_json(t: Tester) -> str:
    if t.kind == "projective":
        input_data = _vector_to_literal(t.input.amplitudes)
        meas_data = {"states": [_vector_to_literal(s.amplitudes) for s in t.measurement.states]}
    elif t.kind == "mes":
        input_data = _vector_to_literal(t.input.amplitudes)
        meas_data = {
            "local_dim": t.measurement.local_dim,
            "states": [_vector_to_literal(s.amplitudes) for s in t.measurement.states],
        }
    else:
        input_data = matrix_to_literal(t.input.matrix)
        meas_data = {"elements": [matrix_to_literal(e) for e in t.measurement.elements]}
    return json.dumps({"kind": t.kind, "input": input_data, "measurement": meas_data})


def tester_from_json(text: str) -> Tester:
    """Load a tester, re-validating every invariant of its parts."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from exc
    try:
        kind = data["kind"]
        input_data = data["input"]
        meas_data = data["measurement"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"tester JSON missing field: {exc}") from exc
    if kind == "projective":
        state = PureState(_vector_from_literal(input_data))
        m = ProjectiveMeasurement(
            tuple(PureState(_vector_from_literal(s)) for s in meas_data["states"])
        )
        return Tester.projective(state, m)
    if kind == "mes":
        m = MesMeasurement(
            int(meas_data["local_dim"]),
            tuple(PureState(_vector_from_literal(s)) for s in meas_data["states"]),
        )
        return Tester.mes(m)
    if kind == "povm":
        rho = DensityMatrix(matrix_from_literal(input_data))
        m = Povm(tuple(matrix_from_literal(e) for e in meas_data["elements"]))
        return Tester.povm(rho, m)
    raise ValueError(f"unknown tester kind {kind!r}")
