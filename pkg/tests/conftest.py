"""Shared fixtures: small named graphs and exhaustive-search oracles."""

from __future__ import annotations

import itertools
import random

import pytest

from majdim import Digraph, Profile, induces, majority_digraph

# A 5-vertex tournament known to be 3-inducible; INDUCING_PROFILE is a
# hand-checked witness, used as an oracle for encoder round-trip tests.
TOURNAMENT_5 = Digraph.from_arcs(
    5,
    [
        (0, 1), (1, 2), (0, 2),
        (3, 0), (1, 3), (2, 3),
        (4, 0), (4, 1), (2, 4), (3, 4),
    ],
)
INDUCING_PROFILE_5 = Profile(
    n=5, voters=((0, 1, 2, 3, 4), (3, 4, 0, 1, 2), (2, 4, 1, 3, 0))
)

# Transitive 6-vertex digraph whose incomparability graph has no transitive
# orientation, so it is not 2-inducible despite passing the easy necessary
# conditions.
HEX_NOT_2 = Digraph.from_arcs(
    6,
    [
        (0, 1), (1, 2), (0, 2),
        (3, 4), (4, 2), (3, 2),
        (0, 5), (3, 5),
    ],
)


def all_linear_orders(n: int):
    return list(itertools.permutations(range(n)))


def exhaustive_k_inducible(g: Digraph, k: int) -> Profile | None:
    """Try every k-tuple of linear orders; tiny n and k only."""
    orders = all_linear_orders(g.n)
    for combo in itertools.product(orders, repeat=k):
        p = Profile(n=g.n, voters=combo)
        if induces(p, g):
            return p
    return None


def random_tournament(n: int, rng: random.Random) -> Digraph:
    arcs = []
    for a in range(n):
        for b in range(a + 1, n):
            arcs.append((a, b) if rng.random() < 0.5 else (b, a))
    return Digraph.from_arcs(n, arcs)


def random_digraph(n: int, rng: random.Random) -> Digraph:
    """Arbitrary orientation or absence for every pair."""
    arcs = []
    for a in range(n):
        for b in range(a + 1, n):
            roll = rng.randrange(3)
            if roll == 0:
                arcs.append((a, b))
            elif roll == 1:
                arcs.append((b, a))
    return Digraph.from_arcs(n, arcs)


def majority_of(voters) -> Digraph:
    p = Profile(n=len(voters[0]), voters=tuple(tuple(v) for v in voters))
    return majority_digraph(p)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
