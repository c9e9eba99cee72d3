"""
Biconditional discrimination under the Rescorla-Wagner model
=============================================================

Four compounds AY, AX, BY, BX are trained once per block, in that order.
AY and BX are reinforced; AX and BY are not.  Every element appears in one
reinforced and one non-reinforced compound, so an elemental learner cannot
solve the task.  This walk-through computes the block map, its Floquet
multipliers and the asymptotic values, then checks them by simulation.
"""

import numpy as np

from assocfloquet import BiconditionalParams, asymptotic_report, biconditional_problem, run_blocks
from assocfloquet.svgplot import render_svg, write_svg

np.set_printoptions(precision=4, suppress=True)

# %% The problem: uniform saliences and learning rates, lambda = 1
params = BiconditionalParams(lam=1.0, beta_plus=0.5, beta_minus=0.5, alpha=0.5)
problem = biconditional_problem("rwm", params)
print("stimuli:", problem.stimuli)
print("kernel K:\n", problem.K)

# %% Training matrix and the effective (lower-triangular) training matrix
report = asymptotic_report(problem)
print("Sigma:\n", report.sigma)
print("L:\n", report.L)

# %% One block of training is the affine map w -> M w + b
print("M:\n", report.M)
print("b:", report.b)

# %% Multipliers: one sits at 1 because the kernel is singular
print("multipliers:", report.spectrum.multipliers.real)
print("unit multiplicity:", report.spectrum.unit_multiplicity)
print("slowest decay per block:", report.spectrum.stable_rate)

# %% Asymptotic values do not depend on the starting weights
print("asymptotic V:", report.asymptotic_values)
print("solved:", report.solved.strict)

# %% Simulate 40 blocks and compare
traj = run_blocks(problem, None, 40)
print("V after 40 blocks:", traj.values[-1])
print("max gap:", np.abs(traj.values[-1] - report.asymptotic_values).max())
# AX and BY are mirror images of each other, so their curves coincide
print("AX vs BY max difference:", np.abs(traj.values[:, 1] - traj.values[:, 2]).max())

# %% Plot
write_svg(render_svg(traj, problem.lam, report.asymptotic_values, "RWM biconditional"),
          "rwm_biconditional.svg")
print("wrote rwm_biconditional.svg")
