"""Construction recipes for Gaussian states.

A recipe is a per-mode list of thermal parameters followed by a sequence of
elementary operations (squeeze, displace, beam splitter).  The same recipe
can be realized either as a GaussianState (here) or as a dense truncated
Fock-space matrix (gauss_renyi.fock.state_to_fock); keeping both sides tied
to one recipe is what makes the dense oracle independent of the Williamson
and kernel machinery under test.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .states import GaussianState, gaussian_transform, tensor, thermal_state


@dataclass(frozen=True)
class Recipe:
    """thermal: per-mode t (inf = vacuum); ops: ("squeeze", mode, r),
    ("displace", mode, gamma), ("phase", mode, phi) or ("beamsplit", theta)
    applied in order."""

    thermal: tuple[float, ...]
    ops: tuple[tuple, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "thermal", tuple(float(t) for t in self.thermal))
        object.__setattr__(self, "ops", tuple(tuple(op) for op in self.ops))
        for op in self.ops:
            if op[0] not in ("squeeze", "displace", "phase", "beamsplit"):
                raise ValueError(f"unknown recipe op {op[0]!r}")
            if op[0] == "beamsplit" and self.n != 2:
                raise ValueError("beamsplit requires a 2-mode recipe")

    @property
    def n(self) -> int:
        return len(self.thermal)


def squeeze_congruence(n: int, mode: int, r: float) -> np.ndarray:
    """Congruence matrix scaling mode's Re block by e^r and Im block by e^-r."""
    L = np.eye(2 * n)
    L[mode, mode] = np.exp(r)
    L[n + mode, n + mode] = np.exp(-r)
    return L


def beamsplit_congruence(theta: float) -> np.ndarray:
    """Two-mode beam-splitter congruence, same rotation on both blocks."""
    c, s = np.cos(theta), np.sin(theta)
    R = np.array([[c, s], [-s, c]])
    L = np.zeros((4, 4))
    L[:2, :2] = R.T
    L[2:, 2:] = R.T
    return L


def phase_congruence(n: int, mode: int, phi: float) -> np.ndarray:
    """Single-mode phase-plate congruence; mixes the mode's Re and Im rows.

    Unlike squeeze/beamsplit congruences this produces covariances with
    coupled Re/Im blocks, which is what pins the complex structure of the
    kernel algebra in tests.
    """
    c, s = np.cos(phi), np.sin(phi)
    L = np.eye(2 * n)
    L[mode, mode] = c
    L[mode, n + mode] = s
    L[n + mode, mode] = -s
    L[n + mode, n + mode] = c
    return L


def recipe_to_state(recipe: Recipe) -> GaussianState:
    """Build the GaussianState described by a recipe."""
    state = thermal_state(recipe.thermal[0])
    for t in recipe.thermal[1:]:
        state = tensor(state, thermal_state(t))
    n = recipe.n
    for op in recipe.ops:
        if op[0] == "squeeze":
            _, mode, r = op
            state = gaussian_transform(state, squeeze_congruence(n, int(mode), float(r)))
        elif op[0] == "displace":
            _, mode, gamma = op
            shift = np.zeros(2 * n)
            shift[int(mode)] = -np.real(gamma)
            shift[n + int(mode)] = -np.imag(gamma)
            state = gaussian_transform(state, np.eye(2 * n), shift=shift)
        elif op[0] == "phase":
            _, mode, phi = op
            state = gaussian_transform(state, phase_congruence(n, int(mode), float(phi)))
        else:
            state = gaussian_transform(state, beamsplit_congruence(float(op[1])))
    return state
