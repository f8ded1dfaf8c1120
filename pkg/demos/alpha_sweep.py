"""Order dependence: sweep alpha across (0, 1) for one pair of states.

The divergence is nondecreasing in alpha; the sweep reuses the reference
reduction across orders, so a dense grid is cheap.

Run with:  python3 demos/alpha_sweep.py
"""

import numpy as np

from gauss_renyi import (gaussian_transform, sandwiched_renyi_sweep,
                         squeezed_vacuum, tensor, thermal_state)
from gauss_renyi.sampling import random_symplectic


def main() -> None:
    rng = np.random.default_rng(7)

    # a correlated 2-mode pair: squeeze and rotate a thermal product
    L = random_symplectic(rng, 2, max_squeeze=0.4)
    rho = gaussian_transform(tensor(thermal_state(0.7), squeezed_vacuum(0.25)), L)
    sigma = gaussian_transform(tensor(thermal_state(1.1), thermal_state(0.9)), L,
                               shift=np.array([0.2, 0.0, -0.1, 0.3]))

    alphas = np.linspace(0.05, 0.95, 19)
    reports = sandwiched_renyi_sweep(rho, sigma, alphas)

    print(f"{'alpha':>6}  {'divergence':>14}  {'T_alpha':>12}")
    last = -np.inf
    for report in reports:
        marker = "" if report.divergence >= last - 1e-9 else "  <-- not monotone?!"
        print(f"{report.alpha:6.2f}  {report.divergence:14.9f}  "
              f"{report.T_alpha:12.9f}{marker}")
        last = report.divergence


if __name__ == "__main__":
    main()
