"""Walsh-Hadamard transforms built entirely from cascaded Haar wavelet transforms."""
from ._backend import BACKEND
from .executor import parallel_execute
from .instrumentation import OpTally
from .oracle import Scaling
from .orderings import apply_permutation, dyadic_to_sequency, natural_to_dyadic
from .schedule import CostModel, InitialPolicy, build_task_graph, simulate
from .transforms import (chw_forward, fwht_dyadic, fwht_natural, haar_forward,
                         haar_inverse, haar_walsh_forward, normalize, stage_blocks)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "CostModel", "InitialPolicy", "OpTally", "Scaling",
    "apply_permutation", "build_task_graph", "chw_forward", "dyadic_to_sequency",
    "fwht_dyadic", "fwht_natural", "haar_forward", "haar_inverse",
    "haar_walsh_forward", "natural_to_dyadic", "normalize", "parallel_execute",
    "simulate", "stage_blocks",
]
