"""Toolkit for computing Dung extensions, inferring the argument preferences
that justify them, and verifying those preferences by attack removal/reversal.
"""

from .filters import common_preferences, unique_preferences
from .generator import GeneratorConfig, SampleBudgetError, random_aaf, sample_instance
from .inference import (
    BranchStructure,
    CollectionCapError,
    DefenderPolicy,
    NotConflictFreeError,
    branch_structure,
    compute_all,
    compute_approx,
    compute_case1,
    expand_case2,
    expand_case3,
)
from .model import (
    ArgumentationFramework,
    ParseError,
    Semantics,
    UnknownArgumentError,
    format_extension,
    parse_apx,
    parse_extension,
    parse_tgf,
    serialize,
)
from .preferences import (
    Preference,
    canonicalize,
    collection_strings,
    equal,
    parse_collection,
    parse_pref,
    parse_pref_set,
    pref_set_strings,
    strict,
)
from .semantics import (
    characteristic,
    defends,
    enumerate_extensions,
    grounded,
    oracle_enumerate,
)
from .verify import (
    VerifyMethod,
    VerifyReport,
    apply_removal,
    apply_reversal,
    verify_collection,
    verify_set,
)

__all__ = [
    "ArgumentationFramework",
    "BranchStructure",
    "CollectionCapError",
    "DefenderPolicy",
    "GeneratorConfig",
    "NotConflictFreeError",
    "ParseError",
    "Preference",
    "SampleBudgetError",
    "Semantics",
    "UnknownArgumentError",
    "VerifyMethod",
    "VerifyReport",
    "apply_removal",
    "apply_reversal",
    "branch_structure",
    "canonicalize",
    "characteristic",
    "collection_strings",
    "common_preferences",
    "compute_all",
    "compute_approx",
    "compute_case1",
    "defends",
    "enumerate_extensions",
    "equal",
    "expand_case2",
    "expand_case3",
    "format_extension",
    "grounded",
    "oracle_enumerate",
    "parse_apx",
    "parse_collection",
    "parse_extension",
    "parse_pref",
    "parse_pref_set",
    "parse_tgf",
    "pref_set_strings",
    "random_aaf",
    "sample_instance",
    "serialize",
    "strict",
    "unique_preferences",
    "verify_collection",
    "verify_set",
]
