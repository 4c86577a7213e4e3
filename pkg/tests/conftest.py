"""Shared strategies and samplers for the test suite."""

from __future__ import annotations

import random
from functools import lru_cache

from hypothesis import settings, strategies as st

from dyckgram.intsets import IntSet, Progression, Range, RestrictionQuad, Single
from dyckgram.oracle import enumerate_paths

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


@lru_cache(maxsize=None)
def unrestricted_paths(n: int):
    return tuple(enumerate_paths(n))


@st.composite
def dyck_paths(draw, max_semilength: int = 7):
    n = draw(st.integers(0, max_semilength))
    paths = unrestricted_paths(n)
    return paths[draw(st.integers(0, len(paths) - 1))]


_atoms = st.one_of(
    st.builds(Single, st.integers(1, 8)),
    st.integers(1, 8).flatmap(
        lambda lo: st.builds(Range, st.just(lo), st.integers(lo, lo + 6))),
    st.builds(Progression, st.integers(1, 4), st.integers(1, 6)),
)

int_sets = st.builds(lambda atoms: IntSet(tuple(atoms)), st.lists(_atoms, max_size=2))

quads = st.builds(RestrictionQuad, int_sets, int_sets, int_sets, int_sets)


def sample_quads(count: int, seed: int) -> list[RestrictionQuad]:
    """Deterministic quad corpus for fixed-size sweeps."""
    rng = random.Random(seed)

    def atom():
        kind = rng.randrange(3)
        if kind == 0:
            return Single(rng.randint(1, 8))
        if kind == 1:
            lo = rng.randint(1, 6)
            return Range(lo, lo + rng.randint(0, 5))
        return Progression(rng.randint(1, 4), rng.randint(1, 6))

    def int_set():
        return IntSet(tuple(atom() for _ in range(rng.randrange(3))))

    return [RestrictionQuad(int_set(), int_set(), int_set(), int_set())
            for _ in range(count)]
