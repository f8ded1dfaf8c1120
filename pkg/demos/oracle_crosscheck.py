"""Closed form vs brute force: truncated number-basis cross-check.

Builds a squeezed displaced thermal state and a squeezed thermal
reference, evaluates the closed-form divergence, then redoes the whole
computation with dense matrices at growing cutoffs.

Run with:  python3 demos/oracle_crosscheck.py
"""

from gauss_renyi import sandwiched_renyi
from gauss_renyi.fock import dense_sandwiched_renyi, state_to_fock
from gauss_renyi.recipes import Recipe, recipe_to_state


def main() -> None:
    rho_recipe = Recipe((0.9,), (("squeeze", 0, 0.35), ("displace", 0, 0.6 - 0.3j)))
    sigma_recipe = Recipe((0.7,), (("squeeze", 0, -0.2),))
    alpha = 0.55

    closed = sandwiched_renyi(recipe_to_state(rho_recipe),
                              recipe_to_state(sigma_recipe), alpha).divergence
    print(f"closed form: {closed:.12f}")
    print()
    print(f"{'cutoff':>6}  {'dense value':>16}  {'|difference|':>12}")
    for cutoff in (10, 20, 40, 80):
        dense = dense_sandwiched_renyi(state_to_fock(rho_recipe, cutoff),
                                       state_to_fock(sigma_recipe, cutoff),
                                       alpha, eig_floor=1e-18)
        print(f"{cutoff:6d}  {dense:16.12f}  {abs(dense - closed):12.3e}")


if __name__ == "__main__":
    main()
