"""Random framework generation and rejection sampling of benchmark instances."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .model import ArgumentationFramework, Semantics
from .semantics import Extension, enumerate_extensions, grounded


class SampleBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class GeneratorConfig:
    size: int
    attack_prob: float
    seed: int = 0
    allow_self_attacks: bool = False

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be non-negative")
        if not 0.0 <= self.attack_prob <= 1.0:
            raise ValueError("attack_prob must be in [0, 1]")


def _argument_names(n: int) -> list[str]:
    width = max(1, len(str(n)))
    return [f"a{i:0{width}d}" for i in range(1, n + 1)]


def random_aaf(config: GeneratorConfig) -> ArgumentationFramework:
    """Independent per-ordered-pair Bernoulli attacks, deterministic per seed."""
    rng = random.Random(config.seed)
    names = _argument_names(config.size)
    attacks = []
    for src in names:
        for dst in names:
            if src == dst and not config.allow_self_attacks:
                continue
            if rng.random() < config.attack_prob:
                attacks.append((src, dst))
    return ArgumentationFramework.of(names, attacks)


def _largest_extension(extensions: list[Extension]) -> Extension:
    best_size = max(len(e) for e in extensions)
    return min((e for e in extensions if len(e) == best_size), key=sorted)


def sample_instance(
    config: GeneratorConfig,
    semantics: Semantics,
    max_attempts: int = 1000,
) -> tuple[ArgumentationFramework, Extension]:
    """Rejection-sample until a framework with a usable non-empty extension appears.

    Grounded requires a non-empty grounded extension; preferred/stable require
    at least one non-empty extension. The largest extension is returned (ties:
    lexicographically smallest).
    """
    if semantics not in (Semantics.GROUNDED, Semantics.PREFERRED, Semantics.STABLE):
        raise ValueError(f"sampling supports grounded/preferred/stable, not {semantics}")
    base = random.Random(config.seed)
    for _ in range(max_attempts):
        attempt_seed = base.randrange(2**63)
        framework = random_aaf(
            GeneratorConfig(
                size=config.size,
                attack_prob=config.attack_prob,
                seed=attempt_seed,
                allow_self_attacks=config.allow_self_attacks,
            )
        )
        if semantics is Semantics.GROUNDED:
            g = grounded(framework)
            if g:
                return framework, g
        else:
            candidates = [
                e for e in enumerate_extensions(framework, semantics) if e
            ]
            if candidates:
                return framework, _largest_extension(candidates)
    raise SampleBudgetError(
        f"no instance with a non-empty {semantics.value} extension in "
        f"{max_attempts} attempts (n={config.size}, Pr={config.attack_prob})"
    )
