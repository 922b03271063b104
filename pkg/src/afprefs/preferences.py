"""Pairwise argument preferences and their canonical text/JSON forms."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .model import check_argument_name

_PREF_RE = re.compile(r"\s*([A-Za-z0-9_]+)\s*([>=])\s*([A-Za-z0-9_]+)\s*\Z")

STRICT = "strict"
EQUAL = "equal"


@dataclass(frozen=True, order=True)
class Preference:
    """One pairwise relation: strict `left > right` or symmetric `left = right`.

    Equalities are stored with left < right so `A = B` and `B = A` compare equal;
    use the `strict` / `equal` factories rather than the bare constructor.
    """

    kind: str
    left: str
    right: str

    def __post_init__(self):
        check_argument_name(self.left)
        check_argument_name(self.right)
        if self.kind not in (STRICT, EQUAL):
            raise ValueError(f"unknown preference kind: {self.kind!r}")
        if self.left == self.right:
            raise ValueError(f"reflexive preference: {self.left!r}")

    def __str__(self) -> str:
        op = ">" if self.kind == STRICT else "="
        return f"{self.left}{op}{self.right}"


def strict(left: str, right: str) -> Preference:
    return Preference(STRICT, left, right)


def equal(left: str, right: str) -> Preference:
    if right < left:
        left, right = right, left
    return Preference(EQUAL, left, right)


def canonicalize(p: Preference) -> Preference:
    """Reorder equalities to left < right; strict preferences are unchanged."""
    if p.kind == EQUAL:
        return equal(p.left, p.right)
    return p


def parse_pref(text: str) -> Preference:
    m = _PREF_RE.match(text)
    if not m:
        raise ValueError(f"malformed preference: {text!r}")
    left, op, right = m.groups()
    return strict(left, right) if op == ">" else equal(left, right)


PreferenceSet = frozenset[Preference]
PreferenceCollection = frozenset[PreferenceSet]


def pref_set_strings(prefs: Iterable[Preference]) -> list[str]:
    return sorted(str(p) for p in prefs)


def collection_strings(collection: Iterable[Iterable[Preference]]) -> list[list[str]]:
    return sorted(pref_set_strings(s) for s in collection)


def parse_pref_set(items: Iterable[str]) -> PreferenceSet:
    return frozenset(parse_pref(t) for t in items)


def parse_collection(items: Iterable[Iterable[str]]) -> PreferenceCollection:
    return frozenset(parse_pref_set(s) for s in items)
