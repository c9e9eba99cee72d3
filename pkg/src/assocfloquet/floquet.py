"""Block-level (Floquet) analysis of a periodic training schedule.

Sampling the weights once per block, ``y(m) = w(m * period)`` obeys the
autonomous recursion ``y(m) = M y(m-1) + b`` with monodromy matrix ``M``.
Writing ``Sigma`` for the training matrix, ``F`` for the training vector and
``L`` for the effective training matrix (lower triangle of ``Sigma`` with a
duration-dependent diagonal)::

    I - M = L^{-1} Sigma,    L b = F.

Every multiplier (eigenvalue of ``M``) lies in the closed unit disc, the
only one on the circle is 1, it is non-defective and its eigenspace is
``ker Sigma``. Hence ``Sigma y(m) -> L P L^{-1} F`` where ``P`` projects
onto the stable subspace along ``ker Sigma``, and the associative values
converge to ``D L P L^{-1} F``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.linalg import solve_triangular

from . import errors
from .linalg import (TOL_CONSISTENCY, TOL_EIG, TOL_ONE, TOL_SOLVED, frozen,
                     null_basis, numerical_rank, range_basis)
from .schedule import Problem, TrainingSystem, training_system


def repetition_factors(sigma, durations) -> np.ndarray:
    """``r_i = sum_{s < L_i} (1 - a_ii)^s``, the gain of ``L_i`` repeated events.

    Exactly 1 when ``L_i = 1``.
    """
    a = np.diag(np.asarray(sigma, dtype=float))
    durations = np.asarray(durations)
    r = -np.expm1(durations * np.log1p(-a)) / a
    return np.where(durations == 1, 1.0, r)


def effective_training_matrix(sigma, durations) -> np.ndarray:
    """Lower-triangular ``L``: strict lower part of ``sigma``, diagonal ``1 / r_i``.

    >>> effective_training_matrix([[0.5]], [2])
    array([[0.66666667]])
    """
    sigma = np.asarray(sigma, dtype=float)
    L = np.tril(sigma, -1)
    L[np.diag_indices_from(L)] = 1.0 / repetition_factors(sigma, durations)
    return L


def _check_agreement(what: str, direct, reduced) -> None:
    gap = float(np.max(np.abs(direct - reduced))) if np.size(direct) else 0.0
    if not gap <= TOL_CONSISTENCY:
        raise errors.ConsistencyFailure(
            f"{what}: direct and triangular constructions differ by {gap:.3e}")


def monodromy_product(system: TrainingSystem) -> np.ndarray:
    """``(I - A_n)^{L_n} ... (I - A_1)^{L_1}``, phase 1 acting first."""
    n = len(system.durations)
    eye = np.eye(n)
    M = eye.copy()
    for (A, _), dur in zip(system.phase_matrices, system.durations):
        M = np.linalg.matrix_power(eye - A, dur) @ M
    return M


def forcing_sum(system: TrainingSystem) -> np.ndarray:
    """Accumulated forcing of one block from zero weights, by explicit sum.

    Phase ``l`` contributes ``F_l * r_l`` along ``e_l`` and is then carried
    through the propagators of the phases after it.
    """
    n = len(system.durations)
    eye = np.eye(n)
    r = repetition_factors(system.sigma, system.durations)
    b = np.zeros(n)
    tail = eye.copy()
    for l in reversed(range(n)):
        b += system.forcing[l] * r[l] * tail[:, l]
        A, _ = system.phase_matrices[l]
        tail = tail @ np.linalg.matrix_power(eye - A, system.durations[l])
    return b


def monodromy(problem: Problem, system: Optional[TrainingSystem] = None, L=None) -> np.ndarray:
    """Monodromy matrix ``M``, computed as ``I - L^{-1} Sigma``.

    The direct product of per-phase propagators is computed as well and the
    two must agree to ``TOL_CONSISTENCY``.

    Raises
    ------
    ConsistencyFailure
    """
    system = system or training_system(problem)
    if L is None:
        L = effective_training_matrix(system.sigma, system.durations)
    M = np.eye(problem.n) - solve_triangular(L, system.sigma, lower=True)
    _check_agreement("monodromy", monodromy_product(system), M)
    return M


def forcing(problem: Problem, L, system: Optional[TrainingSystem] = None) -> np.ndarray:
    """Block forcing ``b`` solving ``L b = F``, cross-checked against :func:`forcing_sum`."""
    system = system or training_system(problem)
    b = solve_triangular(np.asarray(L, dtype=float), system.forcing, lower=True)
    _check_agreement("forcing", forcing_sum(system), b)
    return b


@dataclass(frozen=True, eq=False)
class FloquetSpectrum:
    """Multipliers of ``M``.

    ``stable_rate`` is the largest modulus among multipliers not identified
    with 1 (0 if there are none). It estimates the per-block contraction of
    the transient and is diagnostic only.
    """

    multipliers: np.ndarray
    unit_multiplicity: int
    stable_rate: float


def spectrum(M, sigma) -> FloquetSpectrum:
    """Eigen-analysis of ``M`` with the structural checks the theory guarantees.

    Raises
    ------
    SpectralAnomaly
        A multiplier outside the unit disc, a unit-modulus multiplier other
        than 1, a unit multiplicity different from ``dim ker sigma``, or a
        defective unit multiplier.
    """
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    mu = np.linalg.eigvals(M)
    order = np.lexsort((mu.imag, -np.abs(mu)))
    mu = mu[order]
    modulus = np.abs(mu)
    if np.any(modulus > 1 + TOL_EIG):
        raise errors.SpectralAnomaly(f"multiplier of modulus {modulus.max():.12g} exceeds 1")
    unit = np.abs(mu - 1) <= TOL_ONE
    rogue = (modulus > 1 - TOL_ONE) & ~unit
    if np.any(rogue):
        raise errors.SpectralAnomaly(f"unit-modulus multiplier {mu[rogue][0]} is not 1")
    unit_multiplicity = int(unit.sum())
    kernel_dim = n - numerical_rank(sigma)
    if unit_multiplicity != kernel_dim:
        raise errors.SpectralAnomaly(
            f"{unit_multiplicity} multipliers at 1 but dim ker Sigma = {kernel_dim}")
    E = M - np.eye(n)
    if numerical_rank(E) != numerical_rank(E @ E):
        raise errors.SpectralAnomaly("multiplier 1 is defective")
    stable = modulus[~unit]
    return FloquetSpectrum(
        multipliers=mu,
        unit_multiplicity=unit_multiplicity,
        stable_rate=float(stable.max()) if stable.size else 0.0,
    )


def stable_projection(sigma, L) -> np.ndarray:
    """Projection onto ``range(L^{-1} sigma)`` along ``ker sigma``.

    With the unit multiplier non-defective, ``range(M - I)`` is the stable
    subspace of ``M`` and ``ker(M - I) = ker sigma`` the unstable one, so
    this is the spectral projection onto the stable subspace. Identity when
    ``sigma`` is invertible.

    Raises
    ------
    DegenerateBasis
        If the two subspaces are numerically not complementary.
    """
    sigma = np.asarray(sigma, dtype=float)
    n = sigma.shape[0]
    rank = numerical_rank(sigma)
    if rank == n:
        return np.eye(n)
    S = range_basis(solve_triangular(np.asarray(L, dtype=float), sigma, lower=True), rank=rank)
    N = null_basis(sigma)
    basis = np.hstack([S, N])
    if basis.shape != (n, n) or np.linalg.cond(basis) > 1e12:
        raise errors.DegenerateBasis("stable subspace and ker Sigma are not complementary")
    image = np.hstack([S, np.zeros_like(N)])
    return np.linalg.solve(basis.T, image.T).T


@dataclass(frozen=True)
class SolvedVerdict:
    """Whether the predicted asymptotic values solve the discrimination.

    ``strict``: every reinforced value within ``TOL_SOLVED`` of lambda and
    every non-reinforced one within ``TOL_SOLVED`` of 0. ``thresholded``:
    reinforced values above ``d2`` and non-reinforced below ``d1``; None when
    no thresholds were given.
    """

    strict: bool
    thresholded: Optional[bool] = None
    d1: Optional[float] = None
    d2: Optional[float] = None


def solved_verdict(values, reinforced, lam, thresholds=None) -> SolvedVerdict:
    values = np.asarray(values, dtype=float)
    reinforced = np.asarray(reinforced, dtype=bool)
    target = np.where(reinforced, lam, 0.0)
    strict = bool(np.all(np.abs(values - target) <= TOL_SOLVED))
    if thresholds is None:
        return SolvedVerdict(strict)
    d1, d2 = (float(x) for x in thresholds)
    if not 0 < d1 < d2:
        raise errors.ParamOutOfRange(f"thresholds need 0 < d1 < d2, got d1={d1}, d2={d2}")
    separated = bool(np.all(values[reinforced] > d2) and np.all(values[~reinforced] < d1))
    return SolvedVerdict(strict, separated, d1, d2)


@dataclass(frozen=True, eq=False)
class FloquetReport:
    """Everything the analysis knows about a problem's long-run behaviour.

    ``asymptotic_weights`` is ``Sigma^{-1} F`` when ``Sigma`` is invertible
    and None otherwise (the weights need not converge then).
    ``asymptotic_sigma_w`` is the limit of ``Sigma w(m * period)`` and
    ``asymptotic_values`` the limit of ``K w(m * period)``.
    """

    problem: Problem
    system: TrainingSystem
    L: np.ndarray
    M: np.ndarray
    b: np.ndarray
    spectrum: FloquetSpectrum
    projection: np.ndarray
    sigma_invertible: bool
    asymptotic_weights: Optional[np.ndarray]
    asymptotic_sigma_w: np.ndarray
    asymptotic_values: np.ndarray
    solved: SolvedVerdict

    @property
    def sigma(self) -> np.ndarray:
        return self.system.sigma

    @property
    def F(self) -> np.ndarray:
        return self.system.forcing


def asymptotic_report(problem: Problem, thresholds=None) -> FloquetReport:
    """Run the full analytic pipeline on a validated problem.

    Parameters
    ----------
    problem : Problem
    thresholds : (float, float), optional
        ``(d1, d2)`` for the relaxed solvability verdict.

    Raises
    ------
    ConsistencyFailure, SpectralAnomaly, DegenerateBasis
    """
    system = training_system(problem)
    sigma = system.sigma
    L = effective_training_matrix(sigma, system.durations)
    M = monodromy(problem, system, L)
    b = forcing(problem, L, system)
    spec = spectrum(M, sigma)
    P = stable_projection(sigma, L)
    invertible = numerical_rank(sigma) == problem.n

    sigma_w = L @ (P @ b)
    values = system.d_diag * sigma_w
    weights = None
    if invertible:
        weights = frozen(np.linalg.solve(sigma, system.forcing))

    return FloquetReport(
        problem=problem,
        system=system,
        L=frozen(L),
        M=frozen(M),
        b=frozen(b),
        spectrum=spec,
        projection=frozen(P),
        sigma_invertible=invertible,
        asymptotic_weights=weights,
        asymptotic_sigma_w=frozen(sigma_w),
        asymptotic_values=frozen(values),
        solved=solved_verdict(values, problem.reinforced, problem.lam, thresholds),
    )
