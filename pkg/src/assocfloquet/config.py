"""JSON run configurations.

A configuration names the problem either through a model::

    {"lambda": 1,
     "kernel": {"model": "rwm", "params": {"beta_plus": 0.5, "beta_minus": 0.5, "alpha": 0.5}},
     "blocks": 40}

or through an explicit kernel and phase list::

    {"lambda": 1,
     "stimuli": ["A", "B"],
     "kernel": {"matrix": [[1, 0.2], [0.2, 1]]},
     "phases": [{"stimulus": "A", "duration": 2, "reinforced": true, "rate": 0.3},
                {"stimulus": "B", "duration": 1, "reinforced": false, "rate": 0.3}]}

A model config without ``phases`` gets the standard biconditional schedule;
with ``phases`` (and ``stimuli``) the model only supplies the kernel.
Optional keys: ``w0`` (initial weights), ``blocks`` (default 40) and
``thresholds`` (``{"d1": .., "d2": ..}`` or ``[d1, d2]``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from numbers import Real
from typing import Optional

import numpy as np

from . import errors, models
from .schedule import Phase, Problem, validate_problem

DEFAULT_BLOCKS = 40
_KEYS = {"lambda", "stimuli", "kernel", "phases", "w0", "blocks", "thresholds"}


@dataclass(frozen=True, eq=False)
class RunConfig:
    problem: Problem
    blocks: int = DEFAULT_BLOCKS
    w0: Optional[np.ndarray] = None
    thresholds: Optional[tuple[float, float]] = None
    label: str = "custom"


def load_config(path) -> RunConfig:
    """Read and validate a configuration file.

    Raises
    ------
    OSError
        The file cannot be read.
    ValidationError
        Malformed JSON, schema violations, or an invalid problem.
    """
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise errors.ConfigError(f"{path}: invalid JSON ({exc})") from None
    return parse_config(doc)


def _require(doc, key):
    if key not in doc:
        raise errors.ConfigError(f"missing required key {key!r}")
    return doc[key]


def _number(value, what) -> float:
    if isinstance(value, bool) or not isinstance(value, Real):
        raise errors.ConfigError(f"{what} must be a number, got {value!r}")
    return float(value)


def _phases(raw, stimuli):
    if not isinstance(raw, list):
        raise errors.ConfigError("'phases' must be a list")
    phases = []
    for pos, item in enumerate(raw, start=1):
        if not isinstance(item, dict):
            raise errors.ConfigError(f"phase {pos} must be an object")
        stim = _require(item, "stimulus")
        if isinstance(stim, str):
            if stim not in stimuli:
                raise errors.BadPhaseOrder(f"phase {pos} trains unknown stimulus {stim!r}")
            index = stimuli.index(stim) + 1
        elif isinstance(stim, int) and not isinstance(stim, bool):
            index = stim
        else:
            raise errors.ConfigError(f"phase {pos}: 'stimulus' must be a name or 1-based index")
        reinforced = _require(item, "reinforced")
        if not isinstance(reinforced, bool):
            raise errors.ConfigError(f"phase {pos}: 'reinforced' must be true or false")
        # duration/rate ranges are checked by validate_problem
        phases.append(Phase(index, item.get("duration", 1), reinforced,
                            _require(item, "rate")))
    return phases


def _problem(doc) -> tuple[Problem, str]:
    kernel = _require(doc, "kernel")
    if not isinstance(kernel, dict):
        raise errors.ConfigError("'kernel' must be an object")
    sources = [k for k in ("model", "matrix") if k in kernel]
    if len(sources) != 1:
        raise errors.ConfigError("'kernel' needs exactly one of 'model' or 'matrix'")
    lam = _number(_require(doc, "lambda"), "'lambda'")

    if "model" in kernel:
        name = kernel["model"]
        if name not in models.MODELS:
            raise errors.ConfigError(f"unknown model {name!r}; expected one of {list(models.MODELS)}")
        raw = dict(kernel.get("params", {}))
        unknown = set(raw) - {"beta_plus", "beta_minus", "alpha"}
        if unknown:
            raise errors.ConfigError(f"unknown model params {sorted(unknown)}")
        for key in ("beta_plus", "beta_minus"):
            if key in raw:
                raw[key] = _number(raw[key], f"'{key}'")
        params = models.BiconditionalParams(lam=lam, **raw)
        if "phases" not in doc:
            return models.biconditional_problem(name, params), name
        matrix = models.model_kernel(name, params)
        stimuli = doc.get("stimuli", list(models.STIMULI))
    else:
        try:
            matrix = np.array(kernel["matrix"], dtype=float)
        except (TypeError, ValueError):
            raise errors.ConfigError("'kernel.matrix' must be a numeric square matrix") from None
        stimuli = _require(doc, "stimuli")
        name = "custom"

    if not isinstance(stimuli, list) or not all(isinstance(s, str) for s in stimuli):
        raise errors.ConfigError("'stimuli' must be a list of names")
    phases = _phases(_require(doc, "phases"), stimuli)
    return validate_problem(stimuli, phases, matrix, lam), name


def parse_config(doc) -> RunConfig:
    """Validate an already-decoded configuration document."""
    if not isinstance(doc, dict):
        raise errors.ConfigError("configuration must be a JSON object")
    unknown = set(doc) - _KEYS
    if unknown:
        raise errors.ConfigError(f"unknown configuration keys {sorted(unknown)}")
    problem, label = _problem(doc)

    blocks = doc.get("blocks", DEFAULT_BLOCKS)
    if isinstance(blocks, bool) or not isinstance(blocks, int) or blocks < 0:
        raise errors.ConfigError(f"'blocks' must be an integer >= 0, got {blocks!r}")

    w0 = doc.get("w0")
    if w0 is not None:
        w0 = np.array([_number(x, "'w0' entry") for x in w0]) if isinstance(w0, list) else None
        if w0 is None or w0.shape != (problem.n,):
            raise errors.ConfigError(f"'w0' must be a list of {problem.n} numbers")

    thresholds = doc.get("thresholds")
    if thresholds is not None:
        if isinstance(thresholds, dict):
            thresholds = [_require(thresholds, "d1"), _require(thresholds, "d2")]
        if not isinstance(thresholds, list) or len(thresholds) != 2:
            raise errors.ConfigError("'thresholds' must be {\"d1\": .., \"d2\": ..} or [d1, d2]")
        d1, d2 = (_number(x, "threshold") for x in thresholds)
        if not 0 < d1 < d2:
            raise errors.ParamOutOfRange(f"thresholds need 0 < d1 < d2, got d1={d1}, d2={d2}")
        thresholds = (d1, d2)

    return RunConfig(problem, blocks, w0, thresholds, label)
