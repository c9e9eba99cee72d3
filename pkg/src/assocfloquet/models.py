"""Kernels of three associative-learning models for the biconditional design.

Four compound stimuli built from elements A, B, X, Y are trained in the
fixed order AY+, AX-, BY-, BX+ (``+`` reinforced, ``-`` not). Kernels are
indexed in that order.

- ``rwm``: Rescorla-Wagner, elemental; singular under equal saliences.
- ``iem``: inhibited elements model.
- ``p94``: Pearce's configural model; constant kernel.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from . import errors
from .schedule import KernelMatrix, Phase, Problem, validate_problem

STIMULI = ("AY", "AX", "BY", "BX")
REINFORCED = (True, False, False, True)
ELEMENTS = ("A", "B", "X", "Y")
MODELS = ("rwm", "iem", "p94")

Saliences = Union[float, Mapping[str, float]]


def _saliences(alpha: Saliences, names) -> dict:
    if isinstance(alpha, Mapping):
        missing = [k for k in names if k not in alpha]
        extra = [k for k in alpha if k not in names]
        if missing or extra:
            raise errors.ParamOutOfRange(
                f"saliences must be given for exactly {list(names)}; "
                f"missing {missing}, unexpected {extra}")
        out = {k: float(alpha[k]) for k in names}
    else:
        out = {k: float(alpha) for k in names}
    for k, v in out.items():
        if not 0.0 < v <= 1.0:
            raise errors.ParamOutOfRange(f"salience alpha_{k}={v!r} must lie in (0, 1]")
    return out


def rwm_kernel(alpha: Saliences) -> KernelMatrix:
    """Rescorla-Wagner kernel: shared elements add their saliences.

    ``alpha`` is a mapping over A, B, X, Y or one value for all four.
    """
    a = _saliences(alpha, ELEMENTS)
    A, B, X, Y = a["A"], a["B"], a["X"], a["Y"]
    return KernelMatrix([
        [A + Y, A, Y, 0.0],
        [A, A + X, 0.0, X],
        [Y, 0.0, B + Y, B],
        [0.0, X, B, B + X],
    ])


def iem_kernel(alpha: Saliences) -> KernelMatrix:
    a = _saliences(alpha, ELEMENTS)
    A, B, X, Y = a["A"], a["B"], a["X"], a["Y"]
    return KernelMatrix([
        [(A + Y) / 2, A / 3, Y / 3, 0.0],
        [A / 3, (A + X) / 2, 0.0, X / 3],
        [Y / 3, 0.0, (B + Y) / 2, B / 3],
        [0.0, X / 3, B / 3, (B + X) / 2],
    ])


def p94_kernel() -> KernelMatrix:
    q = 0.25
    return KernelMatrix([
        [1.0, q, q, 0.0],
        [q, 1.0, 0.0, q],
        [q, 0.0, 1.0, q],
        [0.0, q, q, 1.0],
    ])


@dataclass(frozen=True)
class BiconditionalParams:
    """Parameters of a biconditional discrimination.

    ``alpha`` holds element saliences (A, B, X, Y) for ``rwm``/``iem`` and
    compound saliences (AY, AX, BY, BX) for ``p94``, either as a mapping or
    one shared value. For ``p94`` it may be omitted, meaning all ones.
    """

    lam: float = 1.0
    beta_plus: float = 0.5
    beta_minus: float = 0.5
    alpha: Optional[Saliences] = field(default=None)

    def __post_init__(self):
        if not self.lam > 0:
            raise errors.ParamOutOfRange(f"lambda={self.lam!r} must be positive")
        for name in ("beta_plus", "beta_minus"):
            v = getattr(self, name)
            if not 0.0 < v < 1.0:
                raise errors.RateOutOfRange(f"{name}={v!r} must lie in (0, 1)")


def model_kernel(model_name: str, params: BiconditionalParams) -> KernelMatrix:
    if model_name == "rwm":
        return rwm_kernel(_required_alpha(model_name, params))
    if model_name == "iem":
        return iem_kernel(_required_alpha(model_name, params))
    if model_name == "p94":
        return p94_kernel()
    raise errors.ConfigError(f"unknown model {model_name!r}; expected one of {MODELS}")


def _required_alpha(model_name, params):
    if params.alpha is None:
        raise errors.ParamOutOfRange(f"model {model_name!r} needs element saliences alpha")
    return params.alpha


def biconditional_rates(model_name: str, params: BiconditionalParams) -> tuple[float, ...]:
    """Learning rates of the four phases.

    ``rwm``/``iem`` use the reinforcement rates directly; ``p94`` scales them
    by the compound saliences.
    """
    betas = [params.beta_plus if r else params.beta_minus for r in REINFORCED]
    if model_name != "p94":
        return tuple(betas)
    alpha = _saliences(1.0 if params.alpha is None else params.alpha, STIMULI)
    return tuple(b * alpha[s] for b, s in zip(betas, STIMULI))


def biconditional_problem(model_name: str, params: BiconditionalParams) -> Problem:
    """AY+, AX-, BY-, BX+, one event per phase, under the named model."""
    kernel = model_kernel(model_name, params)
    rates = biconditional_rates(model_name, params)
    phases = [Phase(i + 1, 1, r, rate) for i, (r, rate) in enumerate(zip(REINFORCED, rates))]
    return validate_problem(STIMULI, phases, kernel, params.lam)
