"""Inference of the preference sets that justify a conflict-free extension.

The three structural cases branch as follows: case 1 pins a strict
preference, case 2 offers {A>B, A=B}, case 3 offers {A>B, A=B, B>A}, so the
exhaustive result has exactly 2^c2 * 3^c3 sets of c1+c2+c3 atoms each.

Two defender conventions exist in the wild: a strict one that admits a
case-3 defender only when it is itself unattacked, and a looser one where
any extension member attacking the attacker qualifies. Both are available
via `DefenderPolicy`; they disagree on some inputs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Iterable

from .model import ArgumentationFramework
from .preferences import Preference, PreferenceCollection, PreferenceSet, equal, strict

DEFAULT_SET_CAP = 10**7


class DefenderPolicy(str, Enum):
    UNATTACKED = "unattacked"
    ANY_DEFENDER = "any-defender"


class NotConflictFreeError(ValueError):
    pass


class CollectionCapError(RuntimeError):
    def __init__(self, would_be: int, cap: int):
        super().__init__(
            f"exhaustive inference would produce {would_be} preference sets "
            f"(cap {cap})"
        )
        self.would_be = would_be
        self.cap = cap


@dataclass(frozen=True)
class BranchStructure:
    """The per-pair branch points of an inference run, in deterministic order."""

    case1_pairs: tuple[tuple[str, str], ...]
    case2_pairs: tuple[tuple[str, str], ...]
    case3_pairs: tuple[tuple[str, str], ...]

    @property
    def c1(self) -> int:
        return len(self.case1_pairs)

    @property
    def c2(self) -> int:
        return len(self.case2_pairs)

    @property
    def c3(self) -> int:
        return len(self.case3_pairs)

    @property
    def total_sets(self) -> int:
        return 2**self.c2 * 3**self.c3


def _check_extension(framework: ArgumentationFramework, e: frozenset[str]) -> None:
    for a in e:
        framework._require(a)
    if not framework.is_conflict_free(e):
        raise NotConflictFreeError(f"extension {sorted(e)} is not conflict-free")


def _defenders(
    framework: ArgumentationFramework,
    e: frozenset[str],
    member: str,
    attacker: str,
    policy: DefenderPolicy,
) -> frozenset[str]:
    ds = frozenset(
        c
        for c in framework.attackers_of(attacker)
        if c != member and c in e
    )
    if policy is DefenderPolicy.UNATTACKED:
        ds = frozenset(c for c in ds if not framework.attackers_of(c))
    return ds


def branch_structure(
    framework: ArgumentationFramework,
    e: Iterable[str],
    policy: DefenderPolicy = DefenderPolicy.UNATTACKED,
) -> BranchStructure:
    ext = frozenset(e)
    _check_extension(framework, ext)
    case1: list[tuple[str, str]] = []
    case2: list[tuple[str, str]] = []
    case3: list[tuple[str, str]] = []
    for a in sorted(ext):
        for b in sorted(framework.attackers_of(a)):
            if _defenders(framework, ext, a, b, policy):
                case3.append((a, b))
            else:
                case1.append((a, b))
        for b in sorted(framework.attacked_by(a)):
            if a not in framework.attacked_by(b):
                case2.append((a, b))
    return BranchStructure(tuple(case1), tuple(case2), tuple(case3))


def compute_case1(
    framework: ArgumentationFramework,
    e: Iterable[str],
    policy: DefenderPolicy = DefenderPolicy.UNATTACKED,
) -> PreferenceSet:
    bs = branch_structure(framework, e, policy)
    return frozenset(strict(a, b) for a, b in bs.case1_pairs)


def expand_case2(
    framework: ArgumentationFramework,
    e: Iterable[str],
    seed_prefs: PreferenceSet,
) -> PreferenceCollection:
    bs = branch_structure(framework, e, DefenderPolicy.UNATTACKED)
    collection: set[PreferenceSet] = {frozenset(seed_prefs)}
    for a, b in bs.case2_pairs:
        collection = {
            s | {choice} for s in collection for choice in (strict(a, b), equal(a, b))
        }
    return frozenset(collection)


def expand_case3(
    framework: ArgumentationFramework,
    e: Iterable[str],
    collection: PreferenceCollection,
    policy: DefenderPolicy = DefenderPolicy.UNATTACKED,
) -> PreferenceCollection:
    bs = branch_structure(framework, e, policy)
    working: set[PreferenceSet] = set(collection)
    for a, b in bs.case3_pairs:
        working = {
            s | {choice}
            for s in working
            for choice in (strict(a, b), equal(a, b), strict(b, a))
        }
    return frozenset(working)


def _pair_choices(bs: BranchStructure) -> list[tuple[Preference, ...]]:
    choices: list[tuple[Preference, ...]] = []
    for a, b in bs.case2_pairs:
        choices.append((strict(a, b), equal(a, b)))
    for a, b in bs.case3_pairs:
        choices.append((strict(a, b), equal(a, b), strict(b, a)))
    return choices


def compute_all(
    framework: ArgumentationFramework,
    e: Iterable[str],
    policy: DefenderPolicy = DefenderPolicy.UNATTACKED,
    set_cap: int = DEFAULT_SET_CAP,
) -> PreferenceCollection:
    """Every preference set justifying `e`; exactly 2^c2 * 3^c3 sets."""
    bs = branch_structure(framework, e, policy)
    if bs.total_sets > set_cap:
        raise CollectionCapError(bs.total_sets, set_cap)
    base = frozenset(strict(a, b) for a, b in bs.case1_pairs)
    return frozenset(
        base | frozenset(picked) for picked in product(*_pair_choices(bs))
    )


def compute_approx(
    framework: ArgumentationFramework,
    e: Iterable[str],
    policy: DefenderPolicy = DefenderPolicy.UNATTACKED,
    seed: int = 0,
) -> PreferenceSet:
    """One uniformly-sampled member of the exhaustive collection."""
    bs = branch_structure(framework, e, policy)
    rng = random.Random(seed)
    prefs: set[Preference] = {strict(a, b) for a, b in bs.case1_pairs}
    for options in _pair_choices(bs):
        prefs.add(rng.choice(options))
    return frozenset(prefs)
