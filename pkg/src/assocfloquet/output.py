"""Serialisation of reports (JSON) and trajectories (CSV).

JSON numbers are written with 17 significant digits so every float64
round-trips; CSV values use 12 significant digits.
"""

from __future__ import annotations

import csv
import io
import json
import math

import numpy as np

from .dynamics import Trajectory
from .floquet import FloquetReport

JSON_DIGITS = 17
CSV_DIGITS = 12


def report_document(report: FloquetReport) -> dict:
    """Plain-Python view of a report, ready for :func:`dumps`."""
    p = report.problem
    mu = report.spectrum.multipliers
    return {
        "stimuli": list(p.stimuli),
        "lambda": p.lam,
        "reinforced": [bool(x) for x in p.reinforced],
        "durations": [int(x) for x in p.durations],
        "rates": p.rates,
        "sigma": report.sigma,
        "F": report.F,
        "D": report.system.d_diag,
        "L": report.L,
        "M": report.M,
        "b": report.b,
        "multipliers": [{"re": float(z.real), "im": float(z.imag)} for z in np.asarray(mu, dtype=complex)],
        "unit_multiplicity": report.spectrum.unit_multiplicity,
        "stable_rate": report.spectrum.stable_rate,
        "P": report.projection,
        "sigma_invertible": report.sigma_invertible,
        "asymptotic_weights": report.asymptotic_weights,
        "asymptotic_sigma_w": report.asymptotic_sigma_w,
        "asymptotic_values": report.asymptotic_values,
        "solved": report.solved.strict,
        "solved_thresholded": report.solved.thresholded,
        "thresholds": None if report.solved.d1 is None else [report.solved.d1, report.solved.d2],
    }


def _scalar(x) -> str:
    if isinstance(x, (bool, np.bool_)) or x is None or isinstance(x, str):
        return json.dumps(x if not isinstance(x, np.bool_) else bool(x))
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialise non-finite value {x}")
    return format(x, f".{JSON_DIGITS}g")


def _encode(obj, indent: int) -> str:
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    pad = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple, np.ndarray)) for v in obj):
            return "[" + ", ".join(_scalar(v) for v in obj) + "]"
        items = [pad + _encode(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return _scalar(obj)


def dumps(doc) -> str:
    """JSON text with floats at full precision; deterministic for equal input."""
    return _encode(doc, 0) + "\n"


def write_report(report: FloquetReport, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(report_document(report)))


def trajectory_csv(traj: Trajectory) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["block"] + [f"V_{name}" for name in traj.stimuli])
    for m, row in enumerate(traj.values):
        writer.writerow([m] + [format(float(v), f".{CSV_DIGITS}g") for v in row])
    return buf.getvalue()


def write_trajectory(traj: Trajectory, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(trajectory_csv(traj))
