"""
Which kernels solve the biconditional discrimination?
=====================================================

The Rescorla-Wagner kernel has a null vector (1, -1, -1, 1), which is what
makes the discrimination unsolvable.  The configural kernel (P94) and the
inhibitory-elemental kernel (IEM) are invertible; for them the asymptotic
values are exactly lambda on reinforced and 0 on non-reinforced compounds.
How quickly they get there is set by the largest stable multiplier.
"""

import numpy as np

from assocfloquet import BiconditionalParams, asymptotic_report, biconditional_problem, run_blocks
from assocfloquet.linalg import numerical_rank

np.set_printoptions(precision=4, suppress=True)

params = BiconditionalParams(lam=1.0, beta_plus=0.5, beta_minus=0.5, alpha=0.5)

for name in ("rwm", "p94", "iem"):
    problem = biconditional_problem(name, params)
    report = asymptotic_report(problem)
    rho = report.spectrum.stable_rate
    traj = run_blocks(problem, None, 40)
    print(f"--- {name.upper()}")
    print("  rank K:", numerical_rank(problem.K))
    print("  asymptotic V:", report.asymptotic_values, " solved:", report.solved.strict)
    print(f"  stable rate: {rho:.4f}  (about {np.log(1e-6) / np.log(rho):.0f} blocks to reach 1e-6)")
    print("  V after 40 blocks:", traj.values[-1])

# %% The IEM rate depends on the saliences: larger alpha learns faster
for alpha in (0.25, 0.5, 0.75, 1.0):
    report = asymptotic_report(biconditional_problem("iem", BiconditionalParams(1.0, 0.5, 0.5, alpha)))
    print(f"IEM alpha={alpha}: stable rate {report.spectrum.stable_rate:.4f}")

# %% A relaxed verdict: reinforced above d2, non-reinforced below d1
rwm = asymptotic_report(biconditional_problem("rwm", params), thresholds=(0.4, 0.6))
print("RWM with thresholds (0.4, 0.6):", rwm.solved.thresholded)
