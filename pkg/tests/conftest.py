import pytest
from hypothesis import strategies as st

from afprefs import ArgumentationFramework, GeneratorConfig, random_aaf

# Five-argument framework used as the running example across the suite.
AAF1_ATTACKS = [("A", "B"), ("C", "B"), ("C", "D"), ("D", "C"), ("D", "E")]


@pytest.fixture
def aaf1() -> ArgumentationFramework:
    return ArgumentationFramework.of("ABCDE", AAF1_ATTACKS)


@st.composite
def frameworks(draw, max_n: int = 6, self_attacks: bool = True):
    n = draw(st.integers(min_value=0, max_value=max_n))
    names = [f"x{i}" for i in range(n)]
    if n == 0:
        return ArgumentationFramework.of([], [])
    pairs = st.tuples(st.sampled_from(names), st.sampled_from(names))
    if not self_attacks:
        pairs = pairs.filter(lambda p: p[0] != p[1])
    attacks = draw(st.frozensets(pairs))
    return ArgumentationFramework.of(names, attacks)


def seeded_framework(seed: int, size: int, prob: float) -> ArgumentationFramework:
    return random_aaf(GeneratorConfig(size=size, attack_prob=prob, seed=seed))
