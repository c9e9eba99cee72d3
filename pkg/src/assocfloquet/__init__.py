"""Asymptotic associative values under periodic discrimination training.

Typical use::

    from assocfloquet import BiconditionalParams, biconditional_problem, asymptotic_report
    problem = biconditional_problem("rwm", BiconditionalParams(alpha=0.5))
    asymptotic_report(problem).asymptotic_values
"""

from .dynamics import (BlockRecord, Trajectory, WeightState, associative_values,
                       run_blocks, step_event)
from .errors import (AnalysisError, BadDuration, BadPhaseOrder, ConfigError,
                     ConsistencyFailure, DegenerateBasis, EntryOutOfRange, NotPSD,
                     NotSymmetric, ParamOutOfRange, RateOutOfRange, SpectralAnomaly,
                     ValidationError, ZeroSelfKernel)
from .floquet import (FloquetReport, FloquetSpectrum, SolvedVerdict, asymptotic_report,
                      effective_training_matrix, forcing, monodromy, spectrum,
                      stable_projection)
from .models import (BiconditionalParams, biconditional_problem, iem_kernel, p94_kernel,
                     rwm_kernel)
from .schedule import (KernelMatrix, Phase, Problem, TrainingSystem, training_system,
                       validate_problem)

__version__ = "0.1.0"
