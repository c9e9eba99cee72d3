"""Training schedules: phases, kernels, validated problems and the matrices
derived from them.

A schedule trains stimuli ``x_1 .. x_n`` in consecutive phases; phase ``i``
presents ``x_i`` for ``duration`` events, reinforced (target ``lambda``) or
not (target 0), with learning rate ``rate``. One cycle through all phases is
a training block.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral, Real
from typing import Sequence

import numpy as np

from . import errors
from .linalg import TOL_PSD, frozen


@dataclass(frozen=True)
class Phase:
    """One constant stretch of training.

    Attributes
    ----------
    stimulus_index : int
        1-based index of the trained stimulus.
    duration : int
        Number of consecutive training events, at least 1.
    reinforced : bool
    rate : float
        Learning rate in the open interval (0, 1).
    """

    stimulus_index: int
    duration: int
    reinforced: bool
    rate: float


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    """Symmetric non-negative definite matrix of pairwise kernel values.

    Construction validates the matrix; an invalid one raises
    :class:`~assocfloquet.errors.NotSymmetric`,
    :class:`~assocfloquet.errors.ZeroSelfKernel` or
    :class:`~assocfloquet.errors.NotPSD`.
    """

    entries: np.ndarray

    def __post_init__(self):
        k = np.array(self.entries, dtype=float)
        if k.ndim != 2 or k.shape[0] != k.shape[1] or k.shape[0] == 0:
            raise errors.ConfigError(f"kernel must be a non-empty square matrix, got shape {k.shape}")
        if not np.all(np.isfinite(k)):
            raise errors.ConfigError("kernel has non-finite entries")
        if not np.array_equal(k, k.T):
            i, j = np.unravel_index(np.argmax(np.abs(k - k.T)), k.shape)
            raise errors.NotSymmetric(
                f"kernel is not symmetric: k[{i + 1},{j + 1}]={k[i, j]!r} "
                f"but k[{j + 1},{i + 1}]={k[j, i]!r}")
        diag = np.diag(k)
        if np.any(diag <= 0):
            i = int(np.argmin(diag))
            raise errors.ZeroSelfKernel(f"k[{i + 1},{i + 1}]={diag[i]!r} must be positive")
        eig = np.linalg.eigvalsh(k)
        floor = -TOL_PSD * max(float(eig[-1]), 1.0)
        if eig[0] < floor:
            raise errors.NotPSD(f"kernel has eigenvalue {eig[0]!r} below {floor!r}")
        object.__setattr__(self, "entries", frozen(k))

    @property
    def n(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class Problem:
    """A validated training problem. Build with :func:`validate_problem`."""

    stimuli: tuple[str, ...]
    phases: tuple[Phase, ...]
    kernel: KernelMatrix
    lam: float

    @property
    def n(self) -> int:
        return len(self.stimuli)

    @property
    def K(self) -> np.ndarray:
        return self.kernel.entries

    @property
    def rates(self) -> np.ndarray:
        return np.array([p.rate for p in self.phases])

    @property
    def durations(self) -> np.ndarray:
        return np.array([p.duration for p in self.phases], dtype=np.int64)

    @property
    def reinforced(self) -> np.ndarray:
        return np.array([p.reinforced for p in self.phases], dtype=bool)

    @property
    def targets(self) -> np.ndarray:
        """Per-phase reinforcement target: lambda or 0."""
        return np.where(self.reinforced, self.lam, 0.0)

    @property
    def period(self) -> int:
        return int(self.durations.sum())


@dataclass(frozen=True, eq=False)
class TrainingSystem:
    """Matrices derived from a problem.

    ``sigma[i, j] = rate_i * K[j, i]``; ``forcing[i] = rate_i * lambda`` on
    reinforced phases and 0 otherwise; ``d_diag = 1 / rates`` so that
    ``diag(d_diag) @ sigma`` recovers ``K``. ``phase_matrices[i]`` is the
    pair ``(A_i, F_i)`` acting during phase ``i``: row ``i`` of ``sigma``
    (other rows zero) and ``forcing[i] * e_i``.
    """

    sigma: np.ndarray
    forcing: np.ndarray
    d_diag: np.ndarray
    phase_matrices: tuple[tuple[np.ndarray, np.ndarray], ...]
    durations: tuple[int, ...]
    period: int

    @property
    def D(self) -> np.ndarray:
        return np.diag(self.d_diag)


def _check_phase(i: int, phase: Phase, stimulus_names: Sequence[str]) -> None:
    if phase.stimulus_index != i + 1:
        raise errors.BadPhaseOrder(
            f"phase {i + 1} trains stimulus {phase.stimulus_index}; "
            f"expected stimulus {i + 1} ({stimulus_names[i]})")
    d = phase.duration
    if isinstance(d, bool) or not isinstance(d, Integral) or d < 1:
        raise errors.BadDuration(f"phase {i + 1} has duration {d!r}; need an integer >= 1")
    r = phase.rate
    if isinstance(r, bool) or not isinstance(r, Real) or not 0.0 < float(r) < 1.0:
        raise errors.RateOutOfRange(f"phase {i + 1} has rate {r!r}; need 0 < rate < 1")


def validate_problem(stimuli, phases, kernel, lam) -> Problem:
    """Check the modelling assumptions and return a :class:`Problem`.

    Parameters
    ----------
    stimuli : sequence of str
        Stimulus names, ``n`` of them, unique.
    phases : sequence of Phase
        Exactly ``n`` phases; phase ``i`` must train stimulus ``i``.
    kernel : KernelMatrix or array_like
        ``n x n`` kernel values ``k(x_i, x_j)``.
    lam : float
        Reinforcement asymptote, positive.

    Raises
    ------
    ValidationError
        One of the subclasses in :mod:`assocfloquet.errors`, naming the
        first violated assumption.
    """
    stimuli = tuple(str(s) for s in stimuli)
    phases = tuple(phases)
    n = len(stimuli)
    if n < 1:
        raise errors.ConfigError("need at least one stimulus")
    if len(set(stimuli)) != n:
        raise errors.ConfigError(f"stimulus names must be unique: {list(stimuli)}")
    if len(phases) != n:
        raise errors.BadPhaseOrder(f"{len(phases)} phases for {n} stimuli; need one phase per stimulus")
    for i, phase in enumerate(phases):
        _check_phase(i, phase, stimuli)

    if not isinstance(kernel, KernelMatrix):
        kernel = KernelMatrix(kernel)
    if kernel.n != n:
        raise errors.ConfigError(f"kernel is {kernel.n}x{kernel.n} but there are {n} stimuli")

    if isinstance(lam, bool) or not isinstance(lam, Real) or not np.isfinite(lam) or lam <= 0:
        raise errors.ParamOutOfRange(f"lambda={lam!r} must be a positive number")

    rates = np.array([float(p.rate) for p in phases])
    a = rates[:, None] * kernel.entries.T
    bad = (a < 0) | (a >= 1)
    if np.any(bad):
        i, j = np.argwhere(bad)[0]
        raise errors.EntryOutOfRange(
            f"rate_{i + 1} * k(x_{j + 1}, x_{i + 1}) = {a[i, j]!r} is outside [0, 1)")

    phases = tuple(Phase(p.stimulus_index, int(p.duration), bool(p.reinforced), float(p.rate))
                   for p in phases)
    return Problem(stimuli, phases, kernel, float(lam))


def training_system(problem: Problem) -> TrainingSystem:
    n = problem.n
    rates = problem.rates
    sigma = rates[:, None] * problem.K.T
    forcing = rates * problem.targets
    phase_matrices = []
    for i in range(n):
        A = np.zeros((n, n))
        A[i] = sigma[i]
        f = np.zeros(n)
        f[i] = forcing[i]
        phase_matrices.append((frozen(A), frozen(f)))
    durations = tuple(int(d) for d in problem.durations)
    return TrainingSystem(
        sigma=frozen(sigma),
        forcing=frozen(forcing),
        d_diag=frozen(1.0 / rates),
        phase_matrices=tuple(phase_matrices),
        durations=durations,
        period=sum(durations),
    )
