"""Entanglement between diamonds in a chain, seen through joint quadratures.

Minkowski space tiles into a chain of causal diamonds along a null line.
Modes of different diamonds are correlated in the vacuum; for adjacent
diamonds the correlation is strong enough that a joint quadrature beats the
shot-noise floor, which is the two-mode squeezing witness of entanglement.

Run:  python3 demos/diamond_entanglement.py
"""

import math

import numpy as np

from diamondfield import (
    WavepacketSpec,
    build_covariance,
    fig2_sweep,
    joint_variance,
    squeezing_witness,
)

SIGMA = 0.02


def main():
    print("two-mode squeezing between the zeroth and first diamond (a = 1)")
    print(f"packets: omega0 = omega1 = 1, sigma = {SIGMA}, centered")
    cov = build_covariance([
        WavepacketSpec(0, 1.0, SIGMA),
        WavepacketSpec(1, 1.0, SIGMA),
    ])
    w = squeezing_witness(cov, 0, 1)
    print(f"  V(X-(0))     = {w['V_minus_0']:.5f}")
    print(f"  V(X+(pi/2))  = {w['V_plus_half_pi']:.5f}")
    print(f"  entangled    = {w['entangled']}  (both below the shot noise 1)")
    print()

    print("sweep of the first-diamond frequency at two quadrature phases:")
    tab = fig2_sweep(omega1_grid=np.arange(0.5, 1.5001, 0.05))
    for phi in (0.0, 0.2 * math.pi):
        sel = np.isclose(tab["phi"], phi)
        om = tab["omega1"][sel]
        vm = tab["v_minus"][sel]
        i = int(np.argmin(vm))
        print(f"  phi = {phi:5.3f}: min V(X-) = {vm[i]:.5f} at omega1 = {om[i]:.2f}")
    print("  at phi = 0 the dip sits at equal frequencies; a nonzero phase")
    print("  moves it, so packets with different central frequencies can also")
    print("  beat the shot noise.")
    print()

    print("witness versus diamond separation:")
    for n in (1, 2, 5, 20):
        cov_n = build_covariance([
            WavepacketSpec(0, 1.0, SIGMA),
            WavepacketSpec(n, 1.0, SIGMA),
        ])
        w = squeezing_witness(cov_n, 0, 1)
        print(
            f"  n = {n:2d}: V(X-(0)) = {w['V_minus_0']:.6f}  "
            f"entangled = {w['entangled']}"
        )
    print("the cross moments fall off as 1/n^2, so narrow packets in distant")
    print("diamonds no longer show bipartite squeezing.")
    print()

    print("a much broader, higher-frequency probe recovers a faint dip at")
    print("separation 2 (the thermal noise is tiny there while the broad")
    print("profile picks up more of the cross correlation):")
    for om, sig in ((3.0, 0.02), (3.0, 0.6)):
        cov_b = build_covariance([
            WavepacketSpec(0, om, sig),
            WavepacketSpec(2, om, sig),
        ])
        v = joint_variance(cov_b, 0, 1, -1, 0.0)
        print(f"  omega = {om}, sigma = {sig:4.2f}: V(X-(0)) = {v:.7f}")
    print("only one of the two joint quadratures dips below 1 here, so the")
    print("two-sided witness still reports no bipartite squeezing.")


if __name__ == "__main__":
    main()
