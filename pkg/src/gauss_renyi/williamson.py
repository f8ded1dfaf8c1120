"""Williamson normal form of a physical covariance matrix.

Any real symmetric positive definite 2n x 2n matrix S can be brought to
diagonal form D = diag(d_1..d_n, d_1..d_n) by a symplectic congruence
L^T S L = D.  For a physical covariance the d_j are >= 1/2 and map to
per-mode thermal parameters t_j via d = coth(t/2)/2.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exceptions import DecompositionError, UnphysicalStateError
from .states import PURE_TOL, PHYSICAL_TOL, SYMPLECTIC_TOL, symplectic_form

#: residue allowed in L^T S L - D
DIAG_TOL = 1e-8


def _check_symmetric(S: np.ndarray) -> np.ndarray:
    S = np.asarray(S, dtype=float)
    if S.ndim != 2 or S.shape[0] != S.shape[1] or S.shape[0] % 2:
        raise ValueError(f"expected a 2n x 2n matrix, got shape {S.shape}")
    asym = float(np.max(np.abs(S - S.T)))
    if asym > SYMPLECTIC_TOL:
        raise DecompositionError(f"matrix not symmetric: max asymmetry {asym:.3e}")
    return 0.5 * (S + S.T)


def _sym_power(S: np.ndarray, power: float) -> np.ndarray:
    """Fractional power of a symmetric positive definite matrix via eigh."""
    w, v = np.linalg.eigh(S)
    if w.min() <= 0.0:
        raise DecompositionError(
            f"matrix not positive definite: min eigenvalue {w.min():.3e}")
    return (v * w ** power) @ v.T


def d_to_t(d, pure_tol: float = PURE_TOL):
    """Map symplectic eigenvalues to thermal parameters, t = ln((d+1/2)/(d-1/2)).

    Values within pure_tol of 1/2 map to inf; values below 1/2 - PHYSICAL_TOL
    raise UnphysicalStateError.
    """
    d = np.asarray(d, dtype=float)
    if np.any(d < 0.5 - PHYSICAL_TOL):
        bad = float(d.min())
        raise UnphysicalStateError(
            f"symplectic eigenvalue {bad:.6g} < 0.5 (Heisenberg bound)")
    gap = np.maximum(d - 0.5, 0.0)
    with np.errstate(divide="ignore"):
        t = np.where(gap <= pure_tol, np.inf, np.log1p(1.0 / np.where(gap > 0, gap, 1.0)))
    return t if t.ndim else float(t)


def t_to_d(t):
    """Inverse of d_to_t: d = coth(t/2)/2, with t = inf giving exactly 1/2."""
    t = np.asarray(t, dtype=float)
    d = 0.5 / np.tanh(0.5 * t)
    return d if d.ndim else float(d)


def symplectic_eigenvalues(S: np.ndarray) -> np.ndarray:
    """Symplectic spectrum of a symmetric positive definite S, sorted descending.

    Computed as the positive eigenvalues of the hermitian matrix
    i * S^{1/2} J S^{1/2}, which is numerically stable and keeps the
    result exactly real.
    """
    S = _check_symmetric(S)
    n = S.shape[0] // 2
    root = _sym_power(S, 0.5)
    skew = root @ symplectic_form(n) @ root
    ev = np.linalg.eigvalsh(1j * (skew - skew.T) * 0.5)
    return np.sort(ev)[::-1][:n]


@dataclass(frozen=True)
class WilliamsonForm:
    """Symplectic congruence L with L^T S L = diag(d, d) and t = d_to_t(d).

    d is sorted descending, hence t ascending.
    """

    L: np.ndarray
    d: np.ndarray
    t: np.ndarray


def williamson_decompose(S: np.ndarray, *, pure_tol: float = PURE_TOL) -> WilliamsonForm:
    """Compute the Williamson normal form of a physical covariance matrix.

    The congruence matrix is assembled from the real Schur form of the
    skew-symmetric S^{1/2} J S^{1/2}; degenerate symplectic eigenvalues are
    handled by the Schur factorization itself.  Raises DecompositionError
    if the symplectic or diagonalization residues exceed tolerance.
    """
    S = _check_symmetric(S)
    n = S.shape[0] // 2
    J = symplectic_form(n)
    root = _sym_power(S, 0.5)
    inv_root = _sym_power(S, -0.5)
    skew = root @ J @ root
    skew = 0.5 * (skew - skew.T)

    T, Q = scipy.linalg.schur(skew, output="real")

    # The Schur form of a skew-symmetric matrix is block diagonal with
    # 2 x 2 blocks [[0, d], [-d, 0]]; normalize each block's sign and sort
    # the pairs by descending d.
    d_pairs = np.empty(n)
    cols = np.empty((2 * n, 2 * n))
    for j in range(n):
        b = 0.5 * (T[2 * j, 2 * j + 1] - T[2 * j + 1, 2 * j])
        q0, q1 = Q[:, 2 * j], Q[:, 2 * j + 1]
        if b < 0:
            b, q0, q1 = -b, q1, q0
        d_pairs[j] = b
        cols[:, 2 * j], cols[:, 2 * j + 1] = q0, q1
    order = np.argsort(-d_pairs, kind="stable")
    d = d_pairs[order]
    if float(d.min()) < 0.5 - PHYSICAL_TOL:
        raise UnphysicalStateError(
            f"symplectic eigenvalue {float(d.min()):.6g} < 0.5 (Heisenberg bound)")

    perm = np.empty((2 * n, 2 * n))
    scale = np.empty(2 * n)
    for k, j in enumerate(order):
        perm[:, 2 * k: 2 * k + 2] = cols[:, 2 * j: 2 * j + 2]
        scale[2 * k: 2 * k + 2] = np.sqrt(d_pairs[j])
    L_interleaved = inv_root @ (perm * scale)

    # reorder coordinates from (q1, p1, q2, p2, ...) to (q..., p...)
    to_block = np.zeros((2 * n, 2 * n))
    for k in range(n):
        to_block[2 * k, k] = 1.0
        to_block[2 * k + 1, n + k] = 1.0
    L = L_interleaved @ to_block

    res_j = float(np.max(np.abs(L.T @ J @ L - J)))
    if res_j > SYMPLECTIC_TOL:
        raise DecompositionError(
            f"symplectic residue {res_j:.3e} > {SYMPLECTIC_TOL:.0e}; "
            "degenerate eigenvalue cluster could not be resolved")
    D = np.diag(np.concatenate([d, d]))
    res_d = float(np.max(np.abs(L.T @ S @ L - D)))
    if res_d > DIAG_TOL:
        raise DecompositionError(f"diagonalization residue {res_d:.3e} > {DIAG_TOL:.0e}")

    t = d_to_t(d, pure_tol=pure_tol)
    d.flags.writeable = False
    t.flags.writeable = False
    L.flags.writeable = False
    return WilliamsonForm(L=L, d=d, t=t)
