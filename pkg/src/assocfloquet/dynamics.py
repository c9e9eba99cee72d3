"""Event-by-event simulation of the error-correction rule.

This is the brute-force side of every cross-check in the package: nothing
here uses the monodromy matrix or any other block-level construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .schedule import KernelMatrix, Problem


@dataclass(frozen=True)
class WeightState:
    """Weights after some event; ``event_clock`` counts events into the block."""

    weights: np.ndarray
    event_clock: int


@dataclass(frozen=True)
class BlockRecord:
    m: int
    w: np.ndarray
    v: np.ndarray


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Weights and associative values at block boundaries ``t = m * period``.

    Row ``m`` of :attr:`weights` / :attr:`values` is the state after ``m``
    complete blocks; row 0 is the initial state. :attr:`events` is filled
    only when the simulation was asked to record every event.
    """

    stimuli: tuple[str, ...]
    weights: np.ndarray
    values: np.ndarray
    events: tuple[WeightState, ...] = field(default=())

    @property
    def blocks(self) -> np.ndarray:
        return np.arange(len(self.weights))

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, m: int) -> BlockRecord:
        m = range(len(self))[m]
        return BlockRecord(m, self.weights[m], self.values[m])

    def __iter__(self) -> Iterator[BlockRecord]:
        for m in range(len(self)):
            yield self[m]


def associative_values(kernel, weights) -> np.ndarray:
    """``V = K w``."""
    if isinstance(kernel, KernelMatrix):
        kernel = kernel.entries
    return np.asarray(kernel, dtype=float) @ np.asarray(weights, dtype=float)


def active_phase(problem: Problem, t: int) -> int:
    """0-based index of the phase active at global event ``t >= 1``."""
    if t < 1:
        raise ValueError(f"event index must be >= 1, got {t}")
    bounds = np.cumsum(problem.durations)
    return int(np.searchsorted(bounds, (t - 1) % int(bounds[-1]), side="right"))


def step_event(problem: Problem, weights, t: int) -> np.ndarray:
    """Apply training event ``t`` (1-based, counted from the start of training).

    Only the weight of the trained stimulus moves:
    ``w_i += rate_i * (target_i - V_i)``. Returns a new array.
    """
    i = active_phase(problem, t)
    w = np.array(weights, dtype=float)
    phase = problem.phases[i]
    target = problem.lam if phase.reinforced else 0.0
    w[i] += phase.rate * (target - problem.K[:, i] @ w)
    return w


def run_blocks(problem: Problem, w0=None, m_blocks: int = 40, *, record_events: bool = False) -> Trajectory:
    """Simulate ``m_blocks`` complete training blocks.

    Parameters
    ----------
    problem : Problem
    w0 : array_like, optional
        Initial weights; zero if omitted.
    m_blocks : int
        Number of blocks, ``>= 0``.
    record_events : bool
        Also keep the state after every single event.

    Returns
    -------
    Trajectory
        ``m_blocks + 1`` block-boundary records.
    """
    if m_blocks < 0:
        raise ValueError(f"m_blocks must be >= 0, got {m_blocks}")
    n = problem.n
    w = np.zeros(n) if w0 is None else np.array(w0, dtype=float)
    if w.shape != (n,):
        raise ValueError(f"w0 has shape {w.shape}, expected ({n},)")

    K = problem.K
    cols = [np.ascontiguousarray(K[:, i]) for i in range(n)]
    targets = problem.targets
    rates = problem.rates
    durations = problem.durations

    weights = np.empty((m_blocks + 1, n))
    weights[0] = w
    events = []
    for m in range(1, m_blocks + 1):
        clock = 0
        for i in range(n):
            col, rate, target = cols[i], rates[i], targets[i]
            for _ in range(int(durations[i])):
                w[i] += rate * (target - col @ w)
                if record_events:
                    clock += 1
                    events.append(WeightState(w.copy(), clock % problem.period))
        weights[m] = w
    values = weights @ K.T
    return Trajectory(problem.stimuli, weights, values, tuple(events))
