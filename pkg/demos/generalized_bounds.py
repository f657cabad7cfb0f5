#!/usr/bin/env python3
"""Entropic bounds beyond pure-state projective testers.

Three generalizations of the measurement-only bound:

* POVM testers: rank-1 projective POVMs reproduce the projective bound
  exactly, while fuzzy POVMs pay an uncertainty premium of their own
  (the maximally uninformative {I/2, I/2} saturates 2 bits regardless of
  the operators);
* entangled-input testers measured in a maximally entangled basis: the
  diagonal overlaps all equal |Tr(w v+)|/d, so trivial testers do not
  exist unless w v+ is a phase times the identity;
* the variance-style quantity sqrt(1 - |<psi|u|psi>|^2), which calls the
  Pauli pair maximally uncertain even though the pair is perfectly
  distinguishable; the tester-based notion repairs that.
"""

import numpy as np

from utp import (
    Povm,
    PureState,
    bell_basis,
    computational_basis,
    haar_random_unitary,
    identity,
    mes_bound,
    omega,
    pauli,
    povm_bound,
    povm_from_projective,
    projective_bound,
    su2_basis,
    variance_uncertainty,
    zero_bound_witness,
)


def main() -> None:
    v, w = identity(2), omega(-1)
    m = su2_basis(np.pi / 4, 0.0)

    print("rank-1 POVM vs projective bound:")
    print(f"  projective: {projective_bound(m, v, w).value:.9f} bits")
    print(f"  rank-1 POVM: {povm_bound(povm_from_projective(m), v, w).value:.9f} bits")

    fuzzy = Povm((np.eye(2) / 2, np.eye(2) / 2))
    print(f"  uninformative POVM {{I/2, I/2}}: {povm_bound(fuzzy, v, w).value:.6f} bits\n")

    print("entangled-input (Bell measurement) bounds:")
    for d in (2, 3):
        bell = bell_basis(d)
        u1 = haar_random_unitary(d, seed=1)
        u2 = haar_random_unitary(d, seed=2)
        b = mes_bound(bell, u1, u2)
        a = u2.matrix @ u1.matrix.conj().T
        print(f"  d={d}: bound {b.value:.6f} bits; diagonal overlap "
              f"{abs(np.trace(a)) / d:.6f} = |Tr(w v+)|/d")
    print()

    print("variance-style uncertainty vs testing uncertainty for (sigma_x, sigma_z):")
    psi = PureState(np.array([1.0, 0.0], dtype=complex))
    dx = variance_uncertainty(pauli("X"), psi)
    dz = variance_uncertainty(pauli("Z"), psi)
    print(f"  variance quantities on |0>: {dx:.3f} and {dz:.3f} "
          "(the variance relation never lets both vanish)")
    found, tester, _ = zero_bound_witness(pauli("X"), pauli("Z"))
    print(f"  tester witness exists: {found} -> one tester answers both with certainty")
    print(f"  projective bound in the computational basis: "
          f"{projective_bound(computational_basis(2), pauli('X'), pauli('Z')).value:.3f} bits")


if __name__ == "__main__":
    main()
