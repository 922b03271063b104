"""Unique/common preference filtering across two inferred collections."""

from __future__ import annotations

from .preferences import PreferenceCollection, PreferenceSet


def _atoms(collection: PreferenceCollection) -> PreferenceSet:
    out = frozenset()
    for s in collection:
        out |= s
    return out


def unique_preferences(
    c1: PreferenceCollection, c2: PreferenceCollection
) -> PreferenceSet:
    """Atoms appearing somewhere in c1 but in no set of c2."""
    return _atoms(c1) - _atoms(c2)


def common_preferences(
    c1: PreferenceCollection, c2: PreferenceCollection
) -> PreferenceSet:
    """Atoms appearing both somewhere in c1 and somewhere in c2."""
    return _atoms(c1) & _atoms(c2)
