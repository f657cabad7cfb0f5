"""Named unitary operators and the Hilbert-Schmidt geometry of operator space.

Provides the standard qubit unitaries, the clock/shift pair in any
dimension, Haar-random sampling, and the predicates used throughout the
package: Hilbert-Schmidt orthogonality, mutual unbiasedness of unitary
bases, and single-shot perfect distinguishability of an operator pair.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_TOL, as_complex_matrix, is_unitary

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


@dataclass(frozen=True, eq=False)
class UnitaryOperator:
    """A d x d unitary matrix; unitarity is validated on construction."""

    matrix: np.ndarray

    def __post_init__(self) -> None:
        m = as_complex_matrix(self.matrix)
        if m.shape[0] != m.shape[1]:
            raise ValueError(f"unitary operator must be square, got {m.shape}")
        if not is_unitary(m, DEFAULT_TOL):
            dev = np.abs(m.conj().T @ m - np.eye(m.shape[0])).max()
            raise ValueError(f"matrix is not unitary: |U†U - I| = {dev:.3e}")
        m = m.copy()
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def dagger(self) -> "UnitaryOperator":
        return UnitaryOperator(self.matrix.conj().T)

    def __matmul__(self, other: "UnitaryOperator") -> "UnitaryOperator":
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        return UnitaryOperator(self.matrix @ other.matrix)


@dataclass(frozen=True, eq=False)
class UnitaryBasis:
    """A set of pairwise HS-orthogonal unitaries spanning an operator subspace.

    The number of elements must be either d (a d-dimensional subspace of
    the operator space) or d**2 (the full space).
    """

    elements: tuple[UnitaryOperator, ...]

    def __post_init__(self) -> None:
        elements = tuple(self.elements)
        if not elements:
            raise ValueError("a unitary basis needs at least one element")
        d = elements[0].dim
        if any(e.dim != d for e in elements):
            raise ValueError("all basis elements must share one dimension")
        if len(elements) not in (d, d * d):
            raise ValueError(
                f"basis size {len(elements)} is neither d={d} nor d^2={d * d}"
            )
        for i, p in enumerate(elements):
            for q in elements[i + 1 :]:
                ip = hs_inner(p, q)
                if abs(ip) > DEFAULT_TOL:
                    raise ValueError(
                        f"basis elements are not HS-orthogonal: |Tr(P†Q)| = {abs(ip):.3e}"
                    )
        # |Tr(P† P)| = d holds exactly for any unitary; kept as a guard.
        for p in elements:
            if abs(abs(hs_inner(p, p)) - d) > DEFAULT_TOL:
                raise ValueError("basis element does not have HS norm sqrt(d)")
        object.__setattr__(self, "elements", elements)

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    @property
    def subspace_dim(self) -> int:
        return len(self.elements)


def pauli(which: str) -> UnitaryOperator:
    """One of the 2x2 operators I, X, Y, Z."""
    key = which.upper()
    if key not in _PAULI:
        raise ValueError(f"unknown Pauli label {which!r}; expected one of I, X, Y, Z")
    return UnitaryOperator(_PAULI[key])


def identity(d: int = 2) -> UnitaryOperator:
    return UnitaryOperator(np.eye(d, dtype=complex))


def omega(sign: int = -1) -> UnitaryOperator:
    """The qubit rotation (I + sign * i * sigma_y) / sqrt(2), sign in {-1, +1}."""
    if sign not in (-1, 1):
        raise ValueError("sign must be -1 or +1")
    return UnitaryOperator((_PAULI["I"] + sign * 1j * _PAULI["Y"]) / math.sqrt(2))


def clock_shift_pair(d: int) -> tuple[UnitaryOperator, UnitaryOperator]:
    """The commuting-up-to-a-phase pair P (clock) and Q (shift) in dimension d.

    With j, k running over -floor(d/2), ..., floor((d-1)/2):

        P = sum_j exp(i 2 pi j / d) |a_j><a_j|
        Q = sum_k exp(-i 2 pi k / d) |b_k><b_k|,
        |b_k> = (1/sqrt(d)) sum_j exp(i 2 pi j k / d) |a_j>

    where {|a_j>} is the computational basis in ascending index order.
    They satisfy P Q = Q P exp(2 i pi / d) and Tr(P Q†) = 0.
    """
    if d < 2:
        raise ValueError("clock/shift pair needs dimension >= 2")
    js = np.arange(-(d // 2), (d - 1) // 2 + 1)
    clock = np.diag(np.exp(2j * np.pi * js / d))
    fourier = np.exp(2j * np.pi * np.outer(js, js) / d) / math.sqrt(d)  # columns |b_k>
    shift = (fourier * np.exp(-2j * np.pi * js / d)[None, :]) @ fourier.conj().T
    return UnitaryOperator(clock), UnitaryOperator(shift)


def hs_inner(a: UnitaryOperator, b: UnitaryOperator) -> complex:
    """Hilbert-Schmidt inner product Tr(a† b)."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return complex(np.trace(a.matrix.conj().T @ b.matrix))


def is_muub(b1: UnitaryBasis, b2: UnitaryBasis, tol: float = DEFAULT_TOL) -> tuple[bool, float]:
    """Decide whether two unitary bases are mutually unbiased.

    Returns ``(flag, kappa)`` where ``kappa`` is the common value of
    |Tr(P_i† Q_j)|² across all pairs.  The flag is true when that value
    is constant within ``tol`` and equals the value forced by the subspace
    dimension (d for a d-element basis, 1 for a d²-element basis, both
    following from the completeness sum over one basis).  Symmetric in its
    arguments since |Tr(P†Q)| = |Tr(Q†P)|.
    """
    if b1.dim != b2.dim or b1.subspace_dim != b2.subspace_dim:
        raise ValueError("bases must share dimension and subspace dimension")
    d = b1.dim
    expected = d * d / b1.subspace_dim
    overlaps = np.array(
        [[abs(hs_inner(p, q)) ** 2 for q in b2.elements] for p in b1.elements]
    )
    kappa = float(overlaps.mean())
    constant = bool(np.abs(overlaps - kappa).max() <= tol)
    flag = constant and abs(kappa - expected) <= tol
    return flag, kappa


def haar_random_unitary(d: int, seed: int) -> UnitaryOperator:
    """Haar-random unitary via QR of a complex Gaussian, deterministic per seed."""
    if d < 1:
        raise ValueError("dimension must be >= 1")
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    phases = np.diag(r) / np.abs(np.diag(r))
    return UnitaryOperator(q * phases.conj()[None, :])


def _hull_distance_to_origin(points: np.ndarray) -> float:
    """Distance from 0 to the convex hull of points on the unit circle.

    Uses the circular-gap criterion: the origin lies inside the hull iff
    no angular gap between consecutive points exceeds pi; otherwise the
    nearest hull point lies on the chord closing the largest gap.
    """
    ordered = points[np.argsort(np.angle(points))]
    angles = np.angle(ordered)
    gaps = np.diff(angles, append=angles[0] + 2 * np.pi)
    k = int(np.argmax(gaps))
    if gaps[k] <= np.pi:
        return 0.0
    # endpoints adjacent to the widest gap close the arc holding all points
    a = ordered[k]
    b = ordered[(k + 1) % len(ordered)]
    ab = b - a
    denom = abs(ab) ** 2
    if denom < 1e-30:
        return float(abs(a))
    t = np.clip(-(a * ab.conjugate()).real / denom, 0.0, 1.0)
    return float(abs(a + t * ab))


def is_perfectly_distinguishable(
    v: UnitaryOperator, w: UnitaryOperator, tol: float = DEFAULT_TOL
) -> bool:
    """Single-shot distinguishability of a unitary pair.

    True iff there is an input state sending v and w to orthogonal
    outputs, i.e. iff 0 lies in the numerical range of v†w.  Since v†w
    is unitary (hence normal) its numerical range is the convex hull of
    its eigenvalues, so this reduces to an exact 2-D hull membership test
    with distance tolerance ``tol``.
    """
    if v.dim != w.dim:
        raise ValueError(f"dimension mismatch: {v.dim} vs {w.dim}")
    eigenvalues = np.linalg.eigvals(v.matrix.conj().T @ w.matrix)
    return _hull_distance_to_origin(eigenvalues) <= tol


def phase_aligned_distance(a: UnitaryOperator, b: UnitaryOperator) -> float:
    """Max entrywise deviation after aligning the global phase of ``a`` to ``b``."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    ip = hs_inner(a, b)
    phase = ip / abs(ip) if abs(ip) > 1e-15 else 1.0
    return float(np.abs(a.matrix * phase - b.matrix).max())


def equal_up_to_phase(a: UnitaryOperator, b: UnitaryOperator, tol: float = DEFAULT_TOL) -> bool:
    return phase_aligned_distance(a, b) <= tol


def matrix_to_literal(m: np.ndarray) -> dict:
    """JSON-friendly literal {"dim": d, "re": [[..]], "im": [[..]]} for a square matrix."""
    m = as_complex_matrix(m)
    return {"dim": m.shape[0], "re": m.real.tolist(), "im": m.imag.tolist()}


def matrix_from_literal(data: dict) -> np.ndarray:
    try:
        d = int(data["dim"])
        m = np.array(data["re"], dtype=float) + 1j * np.array(data["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix literal: {exc}") from exc
    return as_complex_matrix(m, rows=d, cols=d)


def unitary_to_json(u: UnitaryOperator) -> str:
    return json.dumps(matrix_to_literal(u.matrix))


def unitary_from_json(text: str) -> UnitaryOperator:
    """Parse a matrix literal and validate the unitarity invariant."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed JSON: {exc}") from exc
    return UnitaryOperator(matrix_from_literal(data))
