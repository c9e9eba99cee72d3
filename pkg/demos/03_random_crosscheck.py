"""
Cross-checking the closed form against brute-force simulation
==============================================================

For random schedules (random kernels, rates and phase lengths) the
asymptotic value of Sigma w predicted from L, P and F is compared with the
value reached after many simulated blocks from random starting weights.
Singular kernels are included by duplicating stimuli.
"""

import numpy as np

from assocfloquet import Phase, asymptotic_report, run_blocks, validate_problem

rng = np.random.default_rng(2024)


def random_kernel(n, duplicate):
    B = (rng.random((n, n + 1)) < 0.5).astype(float)
    K = (B * rng.uniform(0.1, 1.0, n + 1)) @ B.T + np.diag(rng.uniform(0.2, 1.0, n))
    if duplicate:
        # make the last stimulus a copy of the first: the kernel becomes singular
        idx = np.r_[np.arange(n - 1), 0]
        K = K[np.ix_(idx, idx)]
    return (K + K.T) / 2


# %% Draw a handful of problems and compare
for trial in range(6):
    n = int(rng.integers(2, 7))
    K = random_kernel(n, duplicate=trial % 2 == 1)
    rates = np.minimum(rng.uniform(0.05, 0.95, n), 0.95 / K.max(axis=0))
    phases = [Phase(i + 1, int(rng.integers(1, 5)), bool(rng.random() < 0.5), float(rates[i]))
              for i in range(n)]
    problem = validate_problem([f"S{i + 1}" for i in range(n)], phases, K, 1.0)
    report = asymptotic_report(problem)

    gaps = []
    for _ in range(3):
        w = run_blocks(problem, rng.normal(size=n), 400).weights[-1]
        gaps.append(np.abs(report.sigma @ w - report.asymptotic_sigma_w).max())
    print(f"n={n} singular={not report.sigma_invertible!s:5} "
          f"rate={report.spectrum.stable_rate:.3f} max gap={max(gaps):.1e}")
