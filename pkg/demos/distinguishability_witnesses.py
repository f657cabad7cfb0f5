#!/usr/bin/env python3
"""Zero-uncertainty testers for perfectly distinguishable pairs.

Whenever 0 lies in the eigenvalue hull of v+w, some input state is
mapped by v and w onto orthogonal outputs, and a tester built around
that state answers both operators with certainty.  The script constructs
such witnesses for the textbook Pauli pair and for clock/shift pairs in
dimensions 2..5, and shows a pair (identity vs a quarter turn) where no
witness exists.
"""

import numpy as np

from utp import (
    clock_shift_pair,
    hs_inner,
    identity,
    is_perfectly_distinguishable,
    omega,
    pair_uncertainty,
    pauli,
    zero_bound_witness,
)


def report(tag, v, w):
    found, tester, trivial = zero_bound_witness(v, w)
    print(f"{tag}: distinguishable={is_perfectly_distinguishable(v, w)}")
    if not found:
        print("  no zero-uncertainty tester exists (bound stays positive)\n")
        return
    uncertainty = pair_uncertainty(tester, v, w).value
    print(f"  witness tester found: pair uncertainty {uncertainty:.2e} bits, "
          f"trivial measurement: {trivial}")
    amps = np.round(tester.input.amplitudes, 6)
    print(f"  input state amplitudes: {amps}\n")


def main() -> None:
    report("sigma_x vs sigma_z", pauli("X"), pauli("Z"))
    for d in range(2, 6):
        p, q = clock_shift_pair(d)
        print(f"clock/shift d={d}: |Tr(P Q+)| = {abs(hs_inner(p, q)):.2e} (orthogonal)")
        report(f"clock vs shift, d={d}", p, q)
    report("identity vs (I - i sigma_y)/sqrt(2)", identity(2), omega(-1))


if __name__ == "__main__":
    main()
