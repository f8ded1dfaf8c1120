"""Built-in cross-checks of the closed-form divergence against oracles.

Five row groups compare independent computations:

  thermal   thermal pairs against a direct eigenvalue-series sum and
            against the dense truncated oracle
  coherent  coherent state vs thermal reference against the rank-one
            analytic formula (the branch where the sandwich is pure)
  squeezed  squeezed/displaced single-mode instances against the dense oracle
  twomode   beam-splitter-correlated pairs against the dense oracle
  trace     the contracted-kernel trace against a dense diagonal-contraction
            sandwich

Dense rows carry a truncation guard: the oracle is evaluated at two cutoffs
and a large residual marks the row "skip (cutoff not converged)" instead of
failing, so small --verify-cutoff values degrade gracefully.
"""

import math
from dataclasses import dataclass

import numpy as np

from .entropy import fractional_power_contraction, sandwiched_renyi
from .exceptions import GaussRenyiError
from .fock import (DEFAULT_CUTOFF_1MODE, DEFAULT_CUTOFF_2MODE,
                   DEFAULT_CUTOFF_THERMAL, dense_renyi_converged,
                   dense_sandwiched_renyi, gamma_contraction, state_to_fock)
from .kernel import apply_contraction, log_kernel_trace, state_to_kernel
from .recipes import Recipe, recipe_to_state
from .states import coherent_state, thermal_state

GROUPS = ("thermal", "coherent", "squeezed", "twomode", "trace")

#: dense rows are adjudicable only while the truncation residual stays below
#: this fraction of the row tolerance
GUARD_FRACTION = 0.5

LN2 = math.log(2.0)


@dataclass(frozen=True)
class VerifyRow:
    """One suite entry: a closed-form value, an oracle value, and a verdict."""

    name: str
    group: str
    alpha: float
    closed: float
    oracle: float
    diff: float
    tol: float
    status: str  # "pass" | "fail" | "skip"
    note: str = ""


def thermal_series_divergence(t: float, s: float, alpha: float) -> float:
    """Divergence of two single-mode thermal states by direct summation.

    The fractional-power sandwich of commuting thermal states is diagonal in
    the number basis with a geometric spectrum, so the trace power is a plain
    scalar series; summing it term by term shares nothing with the kernel
    pipeline.
    """
    q = math.exp(-(alpha * t + (1.0 - alpha) * s))
    total, term = 0.0, 1.0
    while total == 0.0 or term > total * 1e-18:
        total += term
        term *= q
        if term < 1e-300:
            break
    ln_t_alpha = ((1.0 - alpha) * math.log1p(-math.exp(-s))
                  + alpha * math.log1p(-math.exp(-t)) + math.log(total))
    return ln_t_alpha / (alpha - 1.0)


def coherent_thermal_divergence(gamma: complex, s: float, alpha: float) -> float:
    """Closed expression for a coherent state against a thermal reference.

    The fractional-power sandwich of a coherent state is rank one, so the
    trace power is elementary:
    D = -ln(1 - e^-s) + alpha |gamma|^2 (1 - e^(-s(1-alpha)/alpha)) / (1-alpha).
    """
    shrink = -math.expm1(-s * (1.0 - alpha) / alpha)
    return -math.log1p(-math.exp(-s)) + alpha * abs(gamma) ** 2 * shrink / (1.0 - alpha)


def _judge(name: str, group: str, alpha: float, closed: float, oracle: float,
           tol: float, residual: float = 0.0) -> VerifyRow:
    diff = abs(closed - oracle)
    if residual > GUARD_FRACTION * tol:
        return VerifyRow(name, group, alpha, closed, oracle, diff, tol, "skip",
                         f"cutoff not converged (residual {residual:.1e})")
    return VerifyRow(name, group, alpha, closed, oracle, diff, tol,
                     "pass" if diff <= tol else "fail")


def _closed(rho_recipe: Recipe, sigma_recipe: Recipe, alpha: float) -> float:
    return sandwiched_renyi(recipe_to_state(rho_recipe),
                            recipe_to_state(sigma_recipe), alpha).divergence


def _dense_thermal(t: float, s: float, alpha: float,
                   cutoff: int) -> tuple[float, float]:
    # Thermal matrices are diagonal, so their eigenvalues carry no eigh
    # noise; a deep floor keeps the support cut far below the row tolerance
    # even when the sandwich spectrum decays slowly (large alpha).
    def at(c: int) -> float:
        return dense_sandwiched_renyi(state_to_fock(Recipe((t,)), c),
                                      state_to_fock(Recipe((s,)), c),
                                      alpha, eig_floor=1e-60)

    lo, hi = at(cutoff), at(2 * cutoff)
    return hi, abs(hi - lo)


def _thermal_rows(cutoff, tol_override) -> list[VerifyRow]:
    series_tol = 1e-10 if tol_override is None else tol_override
    dense_tol = 1e-7 if tol_override is None else tol_override
    cut = DEFAULT_CUTOFF_THERMAL if cutoff is None else cutoff
    pairs = [(LN2, 2 * LN2), (0.35, 1.1), (2.3, 0.8)]
    rows = []
    for t, s in pairs:
        for alpha in (0.1, 0.5, 0.9):
            rows.append(_judge(f"thermal series t={t:.3g} s={s:.3g}", "thermal",
                               alpha, _closed(Recipe((t,)), Recipe((s,)), alpha),
                               thermal_series_divergence(t, s, alpha), series_tol))
    for t, s in pairs[:2]:
        for alpha in (0.3, 0.7):
            oracle, residual = _dense_thermal(t, s, alpha, cut)
            rows.append(_judge(f"thermal dense t={t:.3g} s={s:.3g}", "thermal",
                               alpha, _closed(Recipe((t,)), Recipe((s,)), alpha),
                               oracle, dense_tol, residual))
    # small alpha against a hot reference drives the contracted thermal
    # parameters far into the tail; guards the deep-contraction spectrum path
    for t, s, alpha in ((0.3, 3.0, 0.1), (0.5, 2.8, 0.15)):
        rows.append(_judge(f"thermal deep t={t:.3g} s={s:.3g}", "thermal",
                           alpha, _closed(Recipe((t,)), Recipe((s,)), alpha),
                           thermal_series_divergence(t, s, alpha), series_tol))
    # products of thermal modes: the divergence is additive over modes
    closed = _closed(Recipe((0.6, 1.3)), Recipe((0.9, 0.5)), 0.45)
    oracle = (thermal_series_divergence(0.6, 0.9, 0.45)
              + thermal_series_divergence(1.3, 0.5, 0.45))
    rows.append(_judge("thermal product 2-mode", "thermal", 0.45, closed,
                       oracle, series_tol))
    return rows


def _coherent_rows(tol_override) -> list[VerifyRow]:
    tol = 1e-9 if tol_override is None else tol_override
    rows = []
    for gamma in (0.5, 1.0, 2.0, 0.3 + 0.4j):
        for s in (LN2, 1.5):
            for alpha in (0.3, 0.5, 0.7):
                closed = sandwiched_renyi(coherent_state(gamma),
                                          thermal_state(s), alpha).divergence
                rows.append(_judge(f"coherent g={gamma:g} s={s:.3g}", "coherent",
                                   alpha, closed,
                                   coherent_thermal_divergence(gamma, s, alpha),
                                   tol))
    return rows


def _squeezed_rows(cutoff, tol_override) -> list[VerifyRow]:
    tol = 1e-6 if tol_override is None else tol_override
    cut = DEFAULT_CUTOFF_1MODE if cutoff is None else cutoff
    cases = [
        ("squeezed displaced vs thermal",
         Recipe((0.9,), (("squeeze", 0, 0.3), ("displace", 0, 0.5 + 0.2j))),
         Recipe((0.7,)), 0.5),
        ("squeezed displaced vs squeezed thermal",
         Recipe((0.9,), (("squeeze", 0, 0.3), ("displace", 0, 0.5 + 0.2j))),
         Recipe((0.6,), (("squeeze", 0, -0.25),)), 0.6),
        ("pure squeezed vs displaced squeezed thermal",
         Recipe((math.inf,), (("squeeze", 0, 0.4), ("displace", 0, -0.3j))),
         Recipe((1.2,), (("squeeze", 0, 0.2), ("displace", 0, 0.3))), 0.7),
        ("phase-mixed pair",
         Recipe((0.8,), (("squeeze", 0, 0.35), ("phase", 0, 0.7),
                         ("displace", 0, 0.4 - 0.2j))),
         Recipe((0.9,), (("phase", 0, -0.5), ("squeeze", 0, 0.2))), 0.55),
    ]
    rows = []
    for name, rho_recipe, sigma_recipe, alpha in cases:
        oracle, residual = dense_renyi_converged(rho_recipe, sigma_recipe,
                                                 alpha, cut)
        rows.append(_judge(name, "squeezed", alpha,
                           _closed(rho_recipe, sigma_recipe, alpha),
                           oracle, tol, residual))
    return rows


def _twomode_rows(cutoff, tol_override) -> list[VerifyRow]:
    tol = 1e-4 if tol_override is None else tol_override
    cut = DEFAULT_CUTOFF_2MODE if cutoff is None else cutoff
    # full doubling is slow in two modes; +8 per mode resolves the guard
    guard = cut + 8
    cases = [
        ("beamsplit correlated vs thermal",
         Recipe((0.8, 1.1), (("squeeze", 0, 0.25), ("beamsplit", 0.6),
                             ("displace", 1, 0.3))),
         Recipe((0.9, 0.7), (("beamsplit", -0.4),)), 0.5),
        ("beamsplit phase pair",
         Recipe((0.7, 0.9), (("beamsplit", 0.5), ("phase", 0, 0.6))),
         Recipe((1.0, 1.2), (("squeeze", 1, -0.2), ("beamsplit", 0.3))), 0.7),
    ]
    rows = []
    for name, rho_recipe, sigma_recipe, alpha in cases:
        oracle, residual = dense_renyi_converged(rho_recipe, sigma_recipe,
                                                 alpha, cut, guard)
        rows.append(_judge(name, "twomode", alpha,
                           _closed(rho_recipe, sigma_recipe, alpha),
                           oracle, tol, residual))
    return rows


def _dense_contraction_trace(recipe: Recipe, k: np.ndarray,
                             cutoff: int) -> tuple[float, float]:
    def at(c: int) -> float:
        rho = state_to_fock(recipe, c)
        g = gamma_contraction(k, recipe.n, c)
        return float(np.trace(g @ rho @ g).real)

    lo, hi = at(cutoff), at(2 * cutoff)
    return hi, abs(hi - lo)


def _trace_rows(cutoff, tol_override) -> list[VerifyRow]:
    tol = 1e-8 if tol_override is None else tol_override
    cut = DEFAULT_CUTOFF_1MODE if cutoff is None else cutoff
    cases = [
        ("trace displaced thermal",
         Recipe((0.8,), (("displace", 0, 0.6 + 0.3j),)), (0.9,), 0.4),
        ("trace squeezed displaced",
         Recipe((1.1,), (("squeeze", 0, 0.3), ("displace", 0, -0.4j))), (0.7,), 0.6),
        ("trace phase mixed",
         Recipe((0.9,), (("squeeze", 0, 0.25), ("phase", 0, 0.8),
                         ("displace", 0, 0.5))), (1.3,), 0.6),
    ]
    rows = []
    for name, recipe, s_vec, alpha in cases:
        k = fractional_power_contraction(np.asarray(s_vec), alpha)
        z = apply_contraction(state_to_kernel(recipe_to_state(recipe)), k)
        closed = math.exp(log_kernel_trace(z))
        oracle, residual = _dense_contraction_trace(recipe, k, cut)
        rows.append(_judge(name, "trace", alpha, closed, oracle, tol, residual))
    return rows


def run_suite(groups=None, cutoff: int | None = None,
              tol_override: float | None = None) -> list[VerifyRow]:
    """Run the cross-validation suite and return its rows.

    groups selects a subset of GROUPS (None runs everything); cutoff
    overrides every dense-oracle cutoff; tol_override replaces every row
    tolerance.  Unknown or empty selections raise GaussRenyiError.
    """
    if groups is None:
        selected = list(GROUPS)
    else:
        selected = list(groups)
        unknown = sorted(set(selected) - set(GROUPS))
        if unknown:
            raise GaussRenyiError(
                f"unknown verify group(s) {unknown}; choose from {', '.join(GROUPS)}")
        if not selected:
            raise GaussRenyiError(
                f"empty verify selection; choose from {', '.join(GROUPS)}")
    if cutoff is not None and cutoff < 2:
        raise GaussRenyiError(f"verify cutoff must be at least 2, got {cutoff}")
    rows: list[VerifyRow] = []
    if "thermal" in selected:
        rows += _thermal_rows(cutoff, tol_override)
    if "coherent" in selected:
        rows += _coherent_rows(tol_override)
    if "squeezed" in selected:
        rows += _squeezed_rows(cutoff, tol_override)
    if "twomode" in selected:
        rows += _twomode_rows(cutoff, tol_override)
    if "trace" in selected:
        rows += _trace_rows(cutoff, tol_override)
    return rows


def suite_passed(rows) -> bool:
    """True when no row failed (skipped rows do not fail the suite)."""
    return all(row.status != "fail" for row in rows)
