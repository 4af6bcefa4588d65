"""Hofstadter's G-sequence by recursion, Zeckendorf shift, golden floor, and tree."""

from .errors import (
    EvaluationError,
    InsufficientHorizonError,
    NoParentError,
    RangeError,
    ValidationError,
)
from .fibzeck import fib, g_floor, g_zeck, isqrt, zeck_decode, zeck_encode
from .recurrence import KFoldSpec, eval_g, eval_kfold, frequency, is_slow
from .tree import TreeCoord, build_explicit, children_count, parent_label

__version__ = "0.1.0"
