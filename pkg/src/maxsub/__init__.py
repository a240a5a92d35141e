"""Permutation-group engine for maximal-subgroup classification checks.

The public surface is re-exported here; the command-line front end lives in
:mod:`maxsub.cli`.
"""

__version__ = "0.1.0"

from .errors import ConsistencyError, InputError, ResourceBoundError
from .perm import Permutation
from .group import PermGroup, SubgroupRef, is_maximal
from .atlas import parse_group_expr
from .structure import (
    chief_series,
    fingerprint,
    fingerprint_name,
    is_solvable,
    is_supersolvable,
    maximal_subgroups,
    solvable_radical,
    sylow_subgroup,
)
from .verify import CheckResult, hypothesis_check, run_check

__all__ = [
    "CheckResult",
    "ConsistencyError",
    "InputError",
    "PermGroup",
    "Permutation",
    "ResourceBoundError",
    "SubgroupRef",
    "chief_series",
    "fingerprint",
    "fingerprint_name",
    "hypothesis_check",
    "is_maximal",
    "is_solvable",
    "is_supersolvable",
    "maximal_subgroups",
    "parse_group_expr",
    "run_check",
    "solvable_radical",
    "sylow_subgroup",
]
