"""Shared test machinery: random problem population, reference
implementations and closed-form fixture matrices."""

import numpy as np

from assocfloquet import Phase, validate_problem
from assocfloquet.linalg import numerical_rank


# -- random population -------------------------------------------------------

def _feature_kernel(rng, n):
    """Stimuli as random element sets with saliences, plus a private element each.

    Non-negative entries and PSD by construction; the private elements keep
    it well conditioned.
    """
    m = int(rng.integers(1, n + 2))
    B = (rng.random((n, m)) < 0.5).astype(float)
    alpha = rng.uniform(0.1, 1.0, m)
    K = (B * alpha) @ B.T + np.diag(rng.uniform(0.2, 1.0, n))
    return (K + K.T) / 2


def _duplicated_kernel(rng, n):
    """Singular kernel: some stimuli are copies of others (same row and column)."""
    base = max(1, n - int(rng.integers(1, 3)))
    K0 = _feature_kernel(rng, base)
    idx = np.concatenate([np.arange(base), rng.integers(0, base, n - base)])
    rng.shuffle(idx)
    return K0[np.ix_(idx, idx)]


def random_problem(rng, n=None, singular=None, lam=None):
    """Draw a valid problem: n <= 8, durations 1-4, rates in (0.05, 0.95).

    Rates are clamped (lowered) where needed so every
    ``rate_i * k(x_j, x_i)`` stays below 1.
    """
    if n is None:
        n = int(rng.integers(1, 9))
    if singular is None:
        singular = n > 1 and rng.random() < 0.5
    K = _duplicated_kernel(rng, n) if singular else _feature_kernel(rng, n)
    rates = rng.uniform(0.05, 0.95, n)
    rates = np.minimum(rates, 0.95 / K.max(axis=0))
    durations = rng.integers(1, 5, n)
    reinforced = rng.random(n) < 0.5
    if lam is None:
        lam = float(rng.uniform(0.5, 2.0))
    phases = [Phase(i + 1, int(durations[i]), bool(reinforced[i]), float(rates[i])) for i in range(n)]
    names = [f"S{i + 1}" for i in range(n)]
    return validate_problem(names, phases, K, lam)


def population(seed, size):
    rng = np.random.default_rng(seed)
    return [random_problem(rng) for _ in range(size)]


# -- reference implementations ------------------------------------------------

def dense_step(problem, w, i):
    """``w' = (I - A) w + F`` with the full phase matrix of phase ``i`` (0-based)."""
    n = problem.n
    A = np.zeros((n, n))
    A[i] = problem.rates[i] * problem.K[:, i]
    F = np.zeros(n)
    F[i] = problem.rates[i] * (problem.lam if problem.phases[i].reinforced else 0.0)
    return (np.eye(n) - A) @ w + F


def dense_block(problem, w):
    w = np.array(w, dtype=float)
    for i, phase in enumerate(problem.phases):
        for _ in range(phase.duration):
            w = dense_step(problem, w, i)
    return w


def is_singular(problem):
    return numerical_rank(problem.K) < problem.n


# -- closed forms for the uniform-parameter RWM biconditional ------------------
# g = alpha * beta; stimuli ordered AY, AX, BY, BX.

def rwm_sigma(g):
    return np.array([[2 * g, g, g, 0],
                     [g, 2 * g, 0, g],
                     [g, 0, 2 * g, g],
                     [0, g, g, 2 * g]])


def rwm_L(g):
    return np.array([[1, 0, 0, 0],
                     [g, 1, 0, 0],
                     [g, 0, 1, 0],
                     [0, g, g, 1.0]])


def rwm_Linv(g):
    return np.array([[1, 0, 0, 0],
                     [-g, 1, 0, 0],
                     [-g, 0, 1, 0],
                     [2 * g * g, -g, -g, 1.0]])


def rwm_M(g):
    h = 1 - 2 * g
    return np.array([
        [h, -g, -g, 0],
        [-g * h, h + g * g, g * g, -g],
        [-g * h, g * g, h + g * g, -g],
        [-2 * g * g * (-1 + 2 * g), -g * (h + 2 * g * g), -g * (h + 2 * g * g), h + 2 * g * g],
    ])


def rwm_P(g):
    c = 4 * (1 - g)
    return np.array([
        [(3 - 2 * g) / c, 1 / 4, 1 / 4, -1 / c],
        [(1 - 2 * g) / c, 3 / 4, -1 / 4, 1 / c],
        [(1 - 2 * g) / c, -1 / 4, 3 / 4, 1 / c],
        [-(1 - 2 * g) / c, 1 / 4, 1 / 4, (3 - 4 * g) / c],
    ])


def rwm_values(g, lam=1.0):
    return lam * np.array([(1 - 2 * g) / (2 * (1 - g)), 0.5, 0.5, 1 / (2 * (1 - g))])


def rwm_minpoly_projection(M, g):
    """``I - q(M) / q(1)`` with ``q(mu) = (mu - (1-2g)) (mu - (1-2g)^2)``."""
    h = 1 - 2 * g
    eye = np.eye(4)
    q = (M - h * eye) @ (M - h * h * eye)
    return eye - q / ((1 - h) * (1 - h * h))
