"""First steps: build a few Gaussian states and compare them.

Run with:  python3 demos/divergence_basics.py
"""

import math

import numpy as np

from gauss_renyi import (coherent_state, sandwiched_renyi, squeezed_vacuum,
                         tensor, thermal_state)


def main() -> None:
    alpha = 0.5

    rho = thermal_state(math.log(2.0))      # mean photon number 1
    sigma = thermal_state(math.log(4.0))    # mean photon number 1/3
    report = sandwiched_renyi(rho, sigma, alpha)
    print("two thermal states, alpha = 0.5")
    print(f"  divergence      : {report.divergence:.12g} nats")
    print(f"  T_alpha         : {report.T_alpha:.12g}")
    print(f"  trace of Z      : {report.trace_Z:.12g}")
    print(f"  reference params: s   = {np.array2string(report.s, precision=6)}")
    print(f"  sandwich params : t_Z = {np.array2string(report.t_Z, precision=6)}")
    print()

    # a displaced pure state against the same reference; here the closed form
    # has an exact answer, D = -ln(1 - e^-s) + a/(1-a) |g|^2 (1 - e^(-s(1-a)/a))
    gamma, s = 1.0, math.log(2.0)
    report = sandwiched_renyi(coherent_state(gamma), thermal_state(s), alpha)
    print("coherent |gamma=1> vs thermal, alpha = 0.5")
    print(f"  divergence : {report.divergence:.12g}")
    print(f"  exact value: {math.log(2.0) + 0.5:.12g}  (ln 2 + 1/2)")
    print()

    # divergence is additive over independent modes
    rho2 = tensor(thermal_state(0.6), squeezed_vacuum(0.3))
    sigma2 = tensor(thermal_state(0.9), thermal_state(1.4))
    joint = sandwiched_renyi(rho2, sigma2, 0.4).divergence
    parts = (sandwiched_renyi(thermal_state(0.6), thermal_state(0.9), 0.4).divergence
             + sandwiched_renyi(squeezed_vacuum(0.3), thermal_state(1.4), 0.4).divergence)
    print("additivity over a 2-mode product")
    print(f"  joint      : {joint:.12g}")
    print(f"  sum of modes: {parts:.12g}")
    print(f"  difference : {abs(joint - parts):.3e}")


if __name__ == "__main__":
    main()
