"""Core data model: argumentation frameworks, APX/TGF parsing and serialization."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

ARG_NAME_RE = re.compile(r"[A-Za-z0-9_]+\Z")

_APX_ARG_RE = re.compile(r"arg\(\s*([A-Za-z0-9_]+)\s*\)\s*\.\s*\Z")
_APX_ATT_RE = re.compile(r"att\(\s*([A-Za-z0-9_]+)\s*,\s*([A-Za-z0-9_]+)\s*\)\s*\.\s*\Z")


class ParseError(ValueError):
    """Malformed APX/TGF input; carries a 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownArgumentError(ValueError):
    pass


def check_argument_name(name: str) -> str:
    if not ARG_NAME_RE.match(name or ""):
        raise ValueError(f"invalid argument name: {name!r}")
    return name


@dataclass(frozen=True)
class ArgumentationFramework:
    """A finite directed attack graph over named arguments.

    Immutable; attacker/target indexes are built once at construction and
    excluded from equality.
    """

    arguments: frozenset[str]
    attacks: frozenset[tuple[str, str]]
    _attackers: dict[str, frozenset[str]] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )
    _targets: dict[str, frozenset[str]] = field(
        init=False, repr=False, compare=False, default_factory=dict
    )

    def __post_init__(self):
        for name in self.arguments:
            check_argument_name(name)
        for src, dst in self.attacks:
            if src not in self.arguments or dst not in self.arguments:
                raise UnknownArgumentError(
                    f"attack ({src},{dst}) references an undeclared argument"
                )
        attackers: dict[str, set[str]] = {a: set() for a in self.arguments}
        targets: dict[str, set[str]] = {a: set() for a in self.arguments}
        for src, dst in self.attacks:
            attackers[dst].add(src)
            targets[src].add(dst)
        self._attackers.update({a: frozenset(s) for a, s in attackers.items()})
        self._targets.update({a: frozenset(s) for a, s in targets.items()})

    @classmethod
    def of(
        cls, arguments: Iterable[str], attacks: Iterable[tuple[str, str]] = ()
    ) -> "ArgumentationFramework":
        return cls(frozenset(arguments), frozenset(attacks))

    def _require(self, a: str) -> str:
        if a not in self.arguments:
            raise UnknownArgumentError(f"unknown argument: {a!r}")
        return a

    def attackers_of(self, a: str) -> frozenset[str]:
        """All arguments b with (b, a) in the attack relation."""
        return self._attackers[self._require(a)]

    def attacked_by(self, a: str) -> frozenset[str]:
        """All arguments b with (a, b) in the attack relation."""
        return self._targets[self._require(a)]

    def is_conflict_free(self, members: Iterable[str]) -> bool:
        s = frozenset(members)
        for a in s:
            self._require(a)
        return not any(self._targets[a] & s for a in s)

    def sorted_arguments(self) -> list[str]:
        return sorted(self.arguments)


class Semantics(str, Enum):
    CONFLICT_FREE = "conflict-free"
    ADMISSIBLE = "admissible"
    COMPLETE = "complete"
    GROUNDED = "grounded"
    PREFERRED = "preferred"
    STABLE = "stable"


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse the solver-competition APX format (arg(X). / att(X,Y). lines)."""
    arguments: set[str] = set()
    attacks: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        m = _APX_ARG_RE.match(line)
        if m:
            arguments.add(m.group(1))
            continue
        m = _APX_ATT_RE.match(line)
        if m:
            attacks.append((m.group(1), m.group(2), lineno))
            continue
        raise ParseError(f"expected 'arg(X).' or 'att(X,Y).', got {line!r}", lineno)
    for src, dst, lineno in attacks:
        for name in (src, dst):
            if name not in arguments:
                raise ParseError(f"undeclared argument {name!r} in att", lineno)
    return ArgumentationFramework.of(arguments, [(s, d) for s, d, _ in attacks])


def parse_tgf(text: str) -> ArgumentationFramework:
    """Parse trivial graph format: node ids, a '#' line, then 'SRC DST' edges."""
    arguments: set[str] = set()
    attacks: list[tuple[str, str]] = []
    seen_sep = False
    sep_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if seen_sep:
                raise ParseError("duplicate '#' separator", lineno)
            seen_sep = True
            sep_line = lineno
            continue
        if not seen_sep:
            if not ARG_NAME_RE.match(line):
                raise ParseError(f"invalid node id {line!r}", lineno)
            arguments.add(line)
        else:
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected 'SRC DST', got {line!r}", lineno)
            src, dst = parts
            for name in (src, dst):
                if name not in arguments:
                    raise ParseError(f"undeclared endpoint {name!r}", lineno)
            attacks.append((src, dst))
    if not seen_sep:
        raise ParseError("missing '#' separator", sep_line or 1)
    return ArgumentationFramework.of(arguments, attacks)


def serialize(framework: ArgumentationFramework, fmt: str = "apx") -> str:
    """Write a framework in canonical (lexicographic) order; reparses to itself."""
    args = framework.sorted_arguments()
    atts = sorted(framework.attacks)
    if fmt == "apx":
        lines = [f"arg({a})." for a in args] + [f"att({s},{d})." for s, d in atts]
    elif fmt == "tgf":
        lines = args + ["#"] + [f"{s} {d}" for s, d in atts]
    else:
        raise ValueError(f"unknown format: {fmt!r}")
    return "".join(line + "\n" for line in lines)


def format_extension(members: Iterable[str]) -> str:
    """Comma-joined sorted members; the empty extension is the empty string."""
    return ",".join(sorted(members))


def parse_extension(text: str) -> frozenset[str]:
    text = text.strip()
    if not text:
        return frozenset()
    names = [t.strip() for t in text.split(",")]
    return frozenset(check_argument_name(n) for n in names)
