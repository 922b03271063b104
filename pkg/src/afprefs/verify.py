"""Preference verification via attack removal / attack reversal transforms."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .model import ArgumentationFramework, Semantics
from .preferences import (
    PreferenceCollection,
    PreferenceSet,
    pref_set_strings,
    strict,
)
from .semantics import Extension, enumerate_extensions, extension_sort_key

log = logging.getLogger(__name__)

PROBLEM_SEMANTICS = frozenset(
    {Semantics.GROUNDED, Semantics.PREFERRED, Semantics.STABLE}
)


class VerifyMethod(str, Enum):
    REMOVAL = "removal"
    REVERSAL = "reversal"


class SemanticsScopeError(ValueError):
    pass


def _check_prefs(framework: ArgumentationFramework, prefs: PreferenceSet) -> None:
    for p in prefs:
        framework._require(p.left)
        framework._require(p.right)


def apply_removal(
    framework: ArgumentationFramework, prefs: PreferenceSet
) -> ArgumentationFramework:
    """Drop each attack (B,A) whose target is strictly preferred to the attacker."""
    _check_prefs(framework, prefs)
    kept = frozenset(
        (b, a) for b, a in framework.attacks if strict(a, b) not in prefs
    )
    return ArgumentationFramework(framework.arguments, kept)


def apply_reversal(
    framework: ArgumentationFramework, prefs: PreferenceSet
) -> ArgumentationFramework:
    """Reverse each attack (B,A) whose target is strictly preferred; keep the rest."""
    _check_prefs(framework, prefs)
    attacks = set()
    for b, a in framework.attacks:
        if strict(a, b) in prefs:
            attacks.add((a, b))
        else:
            attacks.add((b, a))
    return ArgumentationFramework(framework.arguments, frozenset(attacks))


def apply(
    framework: ArgumentationFramework, prefs: PreferenceSet, method: VerifyMethod
) -> ArgumentationFramework:
    if method is VerifyMethod.REMOVAL:
        return apply_removal(framework, prefs)
    return apply_reversal(framework, prefs)


def _check_semantics(semantics: Semantics) -> None:
    if semantics not in PROBLEM_SEMANTICS:
        raise SemanticsScopeError(
            f"verification supports grounded/preferred/stable, not {semantics.value}"
        )


def verify_set(
    framework: ArgumentationFramework,
    e: Iterable[str],
    semantics: Semantics,
    prefs: PreferenceSet,
    method: VerifyMethod,
) -> bool:
    """True iff the transformed framework has `e` as its unique extension."""
    _check_semantics(semantics)
    ext = frozenset(e)
    for a in ext:
        framework._require(a)
    result = enumerate_extensions(apply(framework, prefs, method), semantics)
    return len(result) == 1 and result[0] == ext


@dataclass(frozen=True)
class VerifyReport:
    total: int
    passed: int
    failures: tuple[tuple[PreferenceSet, tuple[Extension, ...]], ...] = field(
        default=()
    )

    @property
    def vcheck(self) -> bool:
        return self.passed == self.total

    def to_json(self) -> dict:
        return {
            "vcheck": self.vcheck,
            "total": self.total,
            "passed": self.passed,
            "failures": [
                {
                    "preference_set": pref_set_strings(prefs),
                    "extensions": [sorted(e) for e in exts],
                }
                for prefs, exts in self.failures
            ],
        }


def verify_collection(
    framework: ArgumentationFramework,
    e: Iterable[str],
    semantics: Semantics,
    collection: PreferenceCollection,
    method: VerifyMethod,
    warn_non_extension: bool = True,
) -> VerifyReport:
    _check_semantics(semantics)
    ext = frozenset(e)
    for a in ext:
        framework._require(a)
    if warn_non_extension and ext not in enumerate_extensions(framework, semantics):
        log.warning(
            "input %s is not a %s extension of the framework; "
            "verification is expected to fail",
            sorted(ext),
            semantics.value,
        )
    passed = 0
    failures = []
    ordered = sorted(collection, key=pref_set_strings)
    for prefs in ordered:
        result = enumerate_extensions(apply(framework, prefs, method), semantics)
        if len(result) == 1 and result[0] == ext:
            passed += 1
        else:
            failures.append((prefs, tuple(sorted(result, key=extension_sort_key))))
    return VerifyReport(total=len(ordered), passed=passed, failures=tuple(failures))
