"""Extension computation under Dung's semantics.

Two independent routes are provided: `enumerate_extensions` (bitmask
backtracking over conflict-free sets, used everywhere) and
`oracle_enumerate` (literal powerset filter, kept as the correctness
reference for differential tests).
"""

from __future__ import annotations

from itertools import chain, combinations
from typing import Iterable

from .model import ArgumentationFramework, Semantics

ORACLE_BOUND = 12

Extension = frozenset[str]


class OracleBoundError(ValueError):
    pass


def defends(framework: ArgumentationFramework, s: Iterable[str], a: str) -> bool:
    """True iff every attacker of `a` is attacked by some member of `s`."""
    members = frozenset(s)
    for m in members:
        framework._require(m)
    return all(
        any(b in framework.attacked_by(c) for c in members)
        for b in framework.attackers_of(a)
    )


def characteristic(framework: ArgumentationFramework, s: Iterable[str]) -> Extension:
    """All arguments defended by `s` (the operator whose least fixpoint is grounded)."""
    members = frozenset(s)
    return frozenset(a for a in framework.arguments if defends(framework, members, a))


def grounded(framework: ArgumentationFramework) -> Extension:
    current: Extension = frozenset()
    while True:
        nxt = characteristic(framework, current)
        if nxt == current:
            return current
        current = nxt


def extension_sort_key(e: Extension) -> tuple[int, list[str]]:
    return (len(e), sorted(e))


class _Masks:
    """Bitmask view of a framework for fast subset search."""

    def __init__(self, framework: ArgumentationFramework):
        self.args = framework.sorted_arguments()
        self.n = len(self.args)
        index = {a: i for i, a in enumerate(self.args)}
        self.att_in = [0] * self.n
        self.att_out = [0] * self.n
        for src, dst in framework.attacks:
            self.att_out[index[src]] |= 1 << index[dst]
            self.att_in[index[dst]] |= 1 << index[src]
        self.full = (1 << self.n) - 1

    def to_set(self, mask: int) -> Extension:
        return frozenset(self.args[i] for i in range(self.n) if mask >> i & 1)

    def conflict_free_masks(self) -> list[int]:
        # Neighbors in the symmetrized conflict graph; self-attackers can
        # never appear in a conflict-free set.
        conflict = [self.att_in[i] | self.att_out[i] for i in range(self.n)]
        out: list[int] = []

        def rec(i: int, mask: int, blocked: int) -> None:
            if i == self.n:
                out.append(mask)
                return
            bit = 1 << i
            rec(i + 1, mask, blocked)
            if not blocked & bit and not conflict[i] & bit:
                rec(i + 1, mask | bit, blocked | conflict[i])

        rec(0, 0, 0)
        return out

    def attacked_union(self, mask: int) -> int:
        acc = 0
        m = mask
        while m:
            low = m & -m
            acc |= self.att_out[low.bit_length() - 1]
            m ^= low
        return acc

    def is_admissible(self, mask: int) -> bool:
        attacked = self.attacked_union(mask)
        m = mask
        while m:
            low = m & -m
            if self.att_in[low.bit_length() - 1] & ~attacked:
                return False
            m ^= low
        return True

    def is_complete(self, mask: int) -> bool:
        attacked = self.attacked_union(mask)
        defended = 0
        for i in range(self.n):
            if not self.att_in[i] & ~attacked:
                defended |= 1 << i
        return defended == mask

    def is_stable(self, mask: int) -> bool:
        return mask | self.attacked_union(mask) == self.full


def enumerate_extensions(
    framework: ArgumentationFramework, semantics: Semantics
) -> list[Extension]:
    """All extensions under `semantics`, in canonical (size, members) order."""
    if semantics is Semantics.GROUNDED:
        return [grounded(framework)]
    masks = _Masks(framework)
    cf = masks.conflict_free_masks()
    if semantics is Semantics.CONFLICT_FREE:
        selected = cf
    elif semantics is Semantics.ADMISSIBLE:
        selected = [m for m in cf if masks.is_admissible(m)]
    elif semantics is Semantics.COMPLETE:
        selected = [m for m in cf if masks.is_complete(m)]
    elif semantics is Semantics.STABLE:
        selected = [m for m in cf if masks.is_stable(m)]
    elif semantics is Semantics.PREFERRED:
        adm = [m for m in cf if masks.is_admissible(m)]
        selected = [m for m in adm if not any(o != m and o & m == m for o in adm)]
    else:
        raise ValueError(f"unknown semantics: {semantics!r}")
    return sorted((masks.to_set(m) for m in selected), key=extension_sort_key)


def _powerset(items: list[str]):
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def oracle_enumerate(
    framework: ArgumentationFramework,
    semantics: Semantics,
    bound: int = ORACLE_BOUND,
) -> list[Extension]:
    """Brute-force reference: filter all 2^n subsets by the textbook predicates."""
    args = framework.sorted_arguments()
    if len(args) > bound:
        raise OracleBoundError(f"{len(args)} arguments exceeds oracle bound {bound}")
    attacks = framework.attacks

    def cf(s: frozenset[str]) -> bool:
        return not any((a, b) in attacks for a in s for b in s)

    def admissible(s: frozenset[str]) -> bool:
        return cf(s) and all(defends(framework, s, a) for a in s)

    def complete(s: frozenset[str]) -> bool:
        return admissible(s) and all(
            a in s for a in args if defends(framework, s, a)
        )

    def stable(s: frozenset[str]) -> bool:
        return cf(s) and all(
            any((b, a) in attacks for b in s) for a in args if a not in s
        )

    subsets = [frozenset(c) for c in _powerset(args)]
    if semantics is Semantics.CONFLICT_FREE:
        selected = [s for s in subsets if cf(s)]
    elif semantics is Semantics.ADMISSIBLE:
        selected = [s for s in subsets if admissible(s)]
    elif semantics is Semantics.COMPLETE:
        selected = [s for s in subsets if complete(s)]
    elif semantics is Semantics.STABLE:
        selected = [s for s in subsets if stable(s)]
    elif semantics is Semantics.PREFERRED:
        adm = [s for s in subsets if admissible(s)]
        selected = [s for s in adm if not any(s < o for o in adm)]
    elif semantics is Semantics.GROUNDED:
        comp = [s for s in subsets if complete(s)]
        selected = [min(comp, key=len)] if comp else []
    else:
        raise ValueError(f"unknown semantics: {semantics!r}")
    return sorted(selected, key=extension_sort_key)
