"""Coherent-vector generating kernels of positive trace-class operators.

A positive operator Z on n modes whose matrix elements between exponential
(unnormalized coherent) vectors take the Gaussian form

    <e(conj(u)) | Z | e(v)> = c * exp(l.u + mu.v + u.A u + u.Lam v + v.B v)

is described here by the quadruple (c, mu, A, Lam); positivity forces
l = conj(mu) and B = conj(A), with A complex symmetric and Lam hermitian
positive semidefinite.  Gaussian states, their fractional-power sandwiches
and their traces all have closed forms in this parametrization.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .exceptions import NotTraceClassError, UnphysicalStateError
from .states import GaussianState

#: max asymmetry / non-hermiticity accepted in kernel matrices
KERNEL_SYM_TOL = 1e-12
#: Lam may dip this far below PSD before we reject it
LAM_PSD_TOL = 1e-10
#: minimum eigenvalue of the real form matrix for trace-class operators
FORM_MIN_EIG = 1e-12


@dataclass(frozen=True)
class CoherentKernel:
    """Parameters (c, mu, A, lam) of a positive Gaussian generating kernel."""

    c: float
    mu: np.ndarray
    A: np.ndarray
    lam: np.ndarray

    def __post_init__(self) -> None:
        mu = np.asarray(self.mu, dtype=complex).reshape(-1)
        n = mu.size
        A = np.asarray(self.A, dtype=complex).reshape(n, n)
        lam = np.asarray(self.lam, dtype=complex).reshape(n, n)
        if not self.c > 0:
            raise ValueError(f"kernel scale c must be positive, got {self.c}")
        if np.max(np.abs(A - A.T)) > KERNEL_SYM_TOL:
            raise ValueError("kernel matrix A must be complex symmetric")
        if np.max(np.abs(lam - lam.conj().T)) > KERNEL_SYM_TOL:
            raise ValueError("kernel matrix lam must be hermitian")
        if np.linalg.eigvalsh(lam).min() < -LAM_PSD_TOL:
            raise ValueError("kernel matrix lam must be positive semidefinite")
        for name, arr in (("mu", mu), ("A", A), ("lam", lam)):
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)
        object.__setattr__(self, "c", float(self.c))

    @property
    def n(self) -> int:
        return self.mu.size


def form_matrix(A: np.ndarray, lam: np.ndarray, *, negate_a: bool = False) -> np.ndarray:
    """Real symmetric 2n x 2n quadratic-form matrix of a kernel.

    M = I - [[Re lam, -Im lam], [Im lam, Re lam]]
          - 2 [[Re A, Im A], [Im A, -Re A]]

    With negate_a=True the sign of A is flipped; that variant is the one
    whose inverse recovers the state's moments.
    """
    A = np.asarray(A, dtype=complex)
    lam = np.asarray(lam, dtype=complex)
    n = A.shape[0]
    sign = -1.0 if negate_a else 1.0
    M = np.eye(2 * n)
    M[:n, :n] -= lam.real + 2.0 * sign * A.real
    M[:n, n:] -= -lam.imag + 2.0 * sign * A.imag
    M[n:, :n] -= lam.imag + 2.0 * sign * A.imag
    M[n:, n:] -= lam.real - 2.0 * sign * A.real
    return 0.5 * (M + M.T)


def form_normalization(A: np.ndarray, lam: np.ndarray) -> float:
    """sqrt(det M(A, lam)); requires M positive semidefinite."""
    w = np.linalg.eigvalsh(form_matrix(A, lam))
    if w.min() < -FORM_MIN_EIG:
        raise NotTraceClassError(
            "operator not positive/trace-class in this parametrization: "
            f"form matrix has eigenvalue {w.min():.3e}")
    w = np.clip(w, 0.0, None)
    if np.any(w == 0.0):
        return 0.0
    return float(np.exp(0.5 * np.sum(np.log(w))))


def log_kernel_trace(kernel: CoherentKernel) -> float:
    """ln Tr Z for a positive kernel; raises NotTraceClassError if M(A, lam)
    is not positive definite (minimum eigenvalue guard at 1e-12).

    Tr Z = c / sqrt(det M) * exp(b . M^{-1} b) with b = (Re mu, -Im mu);
    the sign on the imaginary block comes from the conjugate slot of the
    coherent-vector resolution of the identity.  Uses a Cholesky solve,
    never an explicit inverse, and evaluates the determinant in the log
    domain.
    """
    M = form_matrix(kernel.A, kernel.lam)
    if np.linalg.eigvalsh(M).min() <= FORM_MIN_EIG:
        raise NotTraceClassError(
            "not trace class: form matrix not positive definite "
            f"(needs min eigenvalue > {FORM_MIN_EIG:.0e})")
    cho = scipy.linalg.cho_factor(M, lower=True)
    logdet = 2.0 * float(np.sum(np.log(np.diag(cho[0]))))
    b = np.concatenate([kernel.mu.real, -kernel.mu.imag])
    quad = float(b @ scipy.linalg.cho_solve(cho, b))
    return float(np.log(kernel.c) - 0.5 * logdet + quad)


def kernel_trace(kernel: CoherentKernel) -> float:
    """Tr Z, see log_kernel_trace."""
    return float(np.exp(log_kernel_trace(kernel)))


def state_to_kernel(state: GaussianState) -> CoherentKernel:
    """Kernel parameters of a Gaussian state with mean m and covariance S.

    With G = (I/2 + S)^{-1} partitioned into n x n blocks Gij and
    m = mean[:n] + i mean[n:]:

        A   = ((G11 - G22) + i (G12 + G21)) / 4
        lam = I - ((G11 + G22) + i (G21 - G12)) / 2
        mu  = m - 2 conj(A) conj(m) - conj(lam) m
        c   = det(I/2 + S)^{-1/2}
              * exp(-|m|^2 + 2 Re(m.A m) + m.lam conj(m))

    The mean enters exactly as a displacement acting on the zero-mean
    kernel, which fixes every conjugation above.
    """
    n = state.n
    C = 0.5 * np.eye(2 * n) + state.cov
    try:
        cho = scipy.linalg.cho_factor(0.5 * (C + C.T), lower=True)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - guarded upstream
        raise UnphysicalStateError(f"covariance shifted by I/2 not positive definite: {exc}")
    logdet = 2.0 * float(np.sum(np.log(np.diag(cho[0]))))
    G = scipy.linalg.cho_solve(cho, np.eye(2 * n))
    G = 0.5 * (G + G.T)

    g11, g12 = G[:n, :n], G[:n, n:]
    g21, g22 = G[n:, :n], G[n:, n:]
    A = 0.25 * ((g11 - g22) + 1j * (g12 + g21))
    lam = np.eye(n) - 0.5 * ((g11 + g22) + 1j * (g21 - g12))
    A = 0.5 * (A + A.T)
    lam = 0.5 * (lam + lam.conj().T)

    m = state.mean[:n] + 1j * state.mean[n:]
    mu = m - 2.0 * A.conj() @ m.conj() - lam.conj() @ m
    quad = float((-m.conj() @ m + 2.0 * (m @ A @ m) + m @ lam @ m.conj()).real)
    c = float(np.exp(-0.5 * logdet + quad))
    return CoherentKernel(c=c, mu=mu, A=A, lam=lam)


def kernel_to_state(kernel: CoherentKernel) -> GaussianState:
    """Recover (mean, covariance) from a normalizable Gaussian kernel.

    S = M(-A, lam)^{-1} - I/2, and the mean inverts the displacement map
    of state_to_kernel: m_r = Xi M(A, lam)^{-1} Xi mu_r where Xi negates
    the imaginary block.  Raises UnphysicalStateError when either form
    matrix is singular or indefinite.
    """
    n = kernel.n
    N = form_matrix(kernel.A, kernel.lam, negate_a=True)
    if np.linalg.eigvalsh(N).min() <= FORM_MIN_EIG:
        raise UnphysicalStateError(
            "kernel parameters do not describe a normalizable gaussian state")
    cho = scipy.linalg.cho_factor(N, lower=True)
    cov = scipy.linalg.cho_solve(cho, np.eye(2 * n)) - 0.5 * np.eye(2 * n)
    cov = 0.5 * (cov + cov.T)
    P = form_matrix(kernel.A, kernel.lam)
    if np.linalg.eigvalsh(P).min() <= FORM_MIN_EIG:
        raise UnphysicalStateError(
            "kernel parameters do not describe a normalizable gaussian state")
    xi_mu = np.concatenate([kernel.mu.real, -kernel.mu.imag])
    sol = np.linalg.solve(P, xi_mu)
    mean = np.concatenate([sol[:n], -sol[n:]])
    return GaussianState(mean, cov)


def apply_contraction(kernel: CoherentKernel, k: np.ndarray) -> CoherentKernel:
    """Parameters of Gamma(K) Z Gamma(K) for a diagonal contraction K.

    Gamma(K) is the second quantization of K = diag(k); sandwiching maps
    (c, mu, A, lam) to (c, K mu, K A K, K lam K).  Entries of k must lie
    in [0, 1].
    """
    k = np.asarray(k, dtype=float).reshape(-1)
    if k.size != kernel.n:
        raise ValueError(f"contraction has {k.size} entries for {kernel.n} modes")
    if np.any(k < 0.0) or np.any(k > 1.0 + 1e-12):
        raise ValueError(f"contraction violation: diagonal entries must be in [0, 1], got {k}")
    outer = np.outer(k, k)
    return CoherentKernel(c=kernel.c, mu=k * kernel.mu,
                          A=outer * kernel.A, lam=outer * kernel.lam)


def evaluate_kernel(kernel: CoherentKernel, u: np.ndarray, v: np.ndarray) -> complex:
    """Evaluate c * exp(conj(mu).u + mu.v + u.Au + u.Lam v + v.conj(A)v).

    This is the predicted matrix element <e(conj(u)) | Z | e(v)>; the dense
    Fock oracle computes the same quantity independently.
    """
    u = np.asarray(u, dtype=complex).reshape(-1)
    v = np.asarray(v, dtype=complex).reshape(-1)
    expo = (kernel.mu.conj() @ u + kernel.mu @ v + u @ kernel.A @ u
            + u @ kernel.lam @ v + v @ kernel.A.conj() @ v)
    return complex(kernel.c * np.exp(expo))
