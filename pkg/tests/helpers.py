"""Shared generators for randomized and property-based tests."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from wpp.complex import closure, subsets
from wpp.sequences import random_power_sequence

VALUE_SETS = ((1, 2, 4), (1, 2, 3, 6), (1, 2, 3, 4, 6, 12), (1, 3, 9), (1, 2, 5, 10))


def random_complex(m: int, rng: random.Random, density: float = 0.5):
    """Closure of a random family of faces; ghost vertices are allowed."""
    faces = [f for f in subsets(range(1, m + 1)) if f and rng.random() < density]
    return closure(m, faces)


def random_degrees(m: int, rng: random.Random, max_degree: int = 20, multi: bool = False):
    if multi:
        return tuple(tuple(sorted(rng.randint(1, max_degree) for _ in range(rng.randint(1, 2))))
                     for _ in range(m))
    return tuple((rng.randint(1, max_degree),) for _ in range(m))


@st.composite
def power_sequences(draw, min_m=1, max_m=4, normalized=True):
    m = draw(st.integers(min_m, max_m))
    values = draw(st.sampled_from(VALUE_SETS))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_power_sequence(m, random.Random(seed), values, normalized=normalized)


@st.composite
def power_sequence_pairs(draw, max_m=4):
    m = draw(st.integers(1, max_m))
    values = draw(st.sampled_from(VALUE_SETS))
    a, b = (random_power_sequence(m, random.Random(draw(st.integers(0, 2**32 - 1))), values)
            for _ in range(2))
    return a, b


@st.composite
def complexes(draw, min_m=1, max_m=5):
    m = draw(st.integers(min_m, max_m))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_complex(m, random.Random(seed))
