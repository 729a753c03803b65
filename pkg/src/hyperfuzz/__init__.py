"""Fuzzy ideals of finite hypergroupoids, with exact rational grades."""

from .core import (
    CheckReport,
    HyperGroupoid,
    build_hypergroupoid,
    full,
    hyperop,
    is_hypersemigroup,
    left_zero,
    preimage_pairs,
    relabel,
    right_zero,
    star,
)
from .errors import *  # noqa: F401,F403
from .fuzzy import (
    FuzzySubset,
    Grade,
    compose,
    compose3,
    constant,
    constant_one,
    constant_zero,
    grade,
    grade_grid,
    leq,
    meet,
)
from .ideals import (
    IdealKind,
    IdealProfile,
    Method,
    check_bi_ideal,
    check_ideal,
    check_left_ideal,
    check_quasi_ideal,
    check_right_ideal,
    classify,
)

__version__ = "0.1.0"
