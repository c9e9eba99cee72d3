"""
Longer phases
=============

When stimulus i is trained for L_i consecutive events, the phase acts like a
single event with a rescaled diagonal: the effective training matrix has
diagonal 1/r_i with r_i = (1 - (1 - a_ii)^L_i) / a_ii.  Repeating the
phases of the biconditional schedule shifts the asymptotic values.
"""

import numpy as np

from assocfloquet import (BiconditionalParams, Phase, asymptotic_report, biconditional_problem,
                          run_blocks, rwm_kernel, validate_problem)
from assocfloquet.floquet import repetition_factors

np.set_printoptions(precision=4, suppress=True)

base = biconditional_problem("rwm", BiconditionalParams(1.0, 0.5, 0.5, 0.5))

for L in (1, 2, 5, 20):
    phases = [Phase(p.stimulus_index, L, p.reinforced, p.rate) for p in base.phases]
    problem = validate_problem(base.stimuli, phases, rwm_kernel(0.5), 1.0)
    report = asymptotic_report(problem)
    r = repetition_factors(report.sigma, problem.durations)
    sim = run_blocks(problem, None, 200).values[-1]
    print(f"L={L:2d}  r={r[0]:.4f}  V={report.asymptotic_values}  "
          f"sim gap={np.abs(sim - report.asymptotic_values).max():.1e}")
