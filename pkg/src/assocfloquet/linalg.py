"""Small dense linear-algebra helpers and the package-wide tolerances."""

import numpy as np

# kernel PSD check: lambda_min >= -TOL_PSD * max(lambda_max, 1)
TOL_PSD = 1e-9
# singular values below RANK_RTOL * max(sigma_max, 1) count as zero
RANK_RTOL = 1e-9
TOL_EIG = 1e-9
TOL_ONE = 1e-7
TOL_PROJ = 1e-9
TOL_SOLVED = 1e-6
# agreement required between two constructions of M or b
TOL_CONSISTENCY = 1e-10


def rank_threshold(singular_values):
    smax = singular_values[0] if len(singular_values) else 0.0
    return RANK_RTOL * max(float(smax), 1.0)


def numerical_rank(a):
    """Rank of `a` under the relative singular-value threshold."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    s = np.linalg.svd(a, compute_uv=False)
    return int(np.sum(s > rank_threshold(s)))


def null_basis(a):
    """Orthonormal basis (columns) of the numerical kernel of square `a`."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    _, s, vt = np.linalg.svd(a)
    r = int(np.sum(s > rank_threshold(s)))
    return vt[r:].T.copy()


def range_basis(a, rank=None):
    """Orthonormal basis (columns) of the column space of `a`.

    Parameters
    ----------
    a : (n, k) array_like
    rank : int, optional
        Use this many leading left singular vectors instead of the
        numerical rank of `a`. Lets callers pin the dimension to a rank
        decided on a better-conditioned matrix.
    """
    a = np.atleast_2d(np.asarray(a, dtype=float))
    u, s, _ = np.linalg.svd(a)
    if rank is None:
        rank = int(np.sum(s > rank_threshold(s)))
    return u[:, :rank].copy()


def frozen(a):
    """Float copy of `a` with the writeable flag cleared."""
    out = np.array(a, dtype=float)
    out.setflags(write=False)
    return out
