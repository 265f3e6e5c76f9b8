"""Formula-to-tournament compilers and their constant-size witnesses.

Every builder certifies its own output (the constructor re-checks that the
witness profile induces the graph), so constructing on a random formula
battery is already an end-to-end check; the tests below add the voter-count
contracts, the block decomposition structure, weight sets, and desk-scale
semantic probes.
"""

import itertools
import random

import pytest

from majdim import (
    Digraph,
    ThreeCnf,
    WeightedDigraph,
    banks_tournament,
    brute_force_sat,
    combine_blocks,
    induces,
    kemeny_subdivide,
    min_fas_size,
    random_three_cnf,
    rp_digraph,
    rp_tournament,
    slater_tournament,
    teq_tournament,
    to_reducedfew,
    two_voter_profile,
)
from majdim.digraph import orientation_compatible
from majdim.profiles import weighted_majority

from conftest import random_digraph

BATTERY = 30  # formulas per builder here; the acceptance suite runs 100+


def random_ordered_formula(rng) -> ThreeCnf:
    """Rejection-sample an ordered formula, nudged by a positives-first sort."""
    while True:
        f = random_three_cnf(
            rng, rng.randrange(2, 7), rng.randrange(1, 7), exactly_three=True
        )
        nudged = ThreeCnf.of(
            f.variables,
            sorted(f.clauses, key=lambda c: sum(lit < 0 for lit in c)),
        )
        if nudged.is_ordered:
            return nudged
        if f.is_ordered:
            return f


def random_reduced_formula(rng) -> ThreeCnf:
    while True:
        f = random_three_cnf(
            rng,
            rng.randrange(2, 5),
            rng.randrange(1, 3),
            exactly_three=rng.random() < 0.7,
        )
        g = to_reducedfew(f)
        if g.clauses:  # unit propagation can solve the input outright
            return g


def support_arcs(g) -> set:
    if isinstance(g, WeightedDigraph):
        return {(u, v) for u, v, _ in g.positive_arcs()}
    return set(g.arcs())


def assert_block_structure(out):
    """Named blocks are mutually compatible and cover the graph exactly.

    The completion entry (a full linear-order closure, when present) may
    re-orient pairs already settled by the named blocks, so only its residue
    on uncovered pairs counts toward the coverage identity.
    """
    named = [(n, b) for n, b in out.block_trace if n != "completion"]
    completions = [b for n, b in out.block_trace if n == "completion"]
    for i, (_, a) in enumerate(named):
        for _, b in named[i + 1:]:
            assert orientation_compatible(a, b)
    union = set()
    for _, block in named:
        union |= set(block.arcs())
    sup = support_arcs(out.graph)
    assert union <= sup
    covered = {frozenset(a) for a in union}
    residue = set()
    for comp in completions:
        residue |= {a for a in comp.arcs() if frozenset(a) not in covered}
    assert union | residue == sup


# ---------------------------------------------------------------------------
# building blocks


def test_two_voter_profile_margins(rng):
    for _ in range(30):
        g = random_digraph(6, rng)
        if not g.is_transitive():
            continue
        try:
            p = two_voter_profile(g)
        except ValueError:
            continue  # incomparability graph not orientable
        assert p.k == 2
        assert induces(p, g)
        w = weighted_majority(p)
        assert all(w.weight(u, v) == 2 for u, v in g.arcs())


def test_two_voter_profile_rejects_intransitive():
    with pytest.raises(ValueError):
        two_voter_profile(Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)]))


def test_combine_blocks_stacks_voters():
    e1 = Digraph.from_arcs(4, [(0, 1)])
    e2 = Digraph.from_arcs(4, [(2, 3)])
    p = combine_blocks(
        [two_voter_profile(e1), two_voter_profile(e2)], (0, 1, 2, 3)
    )
    assert p.k == 5
    assert induces(p, Digraph.from_arcs(4, [(0, 1), (2, 3), (0, 2), (0, 3), (1, 2), (1, 3)]))


def test_combine_blocks_rejects_conflicting_blocks():
    e1 = Digraph.from_arcs(2, [(0, 1)])
    e2 = Digraph.from_arcs(2, [(1, 0)])
    with pytest.raises(ValueError):
        combine_blocks([two_voter_profile(e1), two_voter_profile(e2)])


# ---------------------------------------------------------------------------
# the six compilers


def test_banks_battery(rng):
    for _ in range(BATTERY):
        f = random_ordered_formula(rng)
        out = banks_tournament(f)
        assert out.witness.k == 5
        assert out.decision_vertex == 0
        assert out.graph.is_tournament()
        assert_block_structure(out)


def test_banks_vertex_count():
    one = banks_tournament(ThreeCnf.of(3, [(1, 2, 3)]))
    assert one.graph.n == 5
    two = banks_tournament(ThreeCnf.of(3, [(1, 2, 3), (-1, -2, -3)]))
    assert two.graph.n == 11


def test_banks_rejects_unordered():
    with pytest.raises(ValueError):
        banks_tournament(ThreeCnf.of(2, [(-1, 2), (1, -2)]))


def test_teq_battery(rng):
    for _ in range(BATTERY):
        f = random_ordered_formula(rng)
        out = teq_tournament(f)
        assert out.witness.k == 7
        assert out.decision_vertex == 0
        assert out.graph.is_tournament()
        assert_block_structure(out)


def test_teq_vertex_count():
    assert teq_tournament(ThreeCnf.of(3, [(1, 2, 3)])).graph.n == 5
    three = teq_tournament(
        ThreeCnf.of(4, [(1, 2, 3), (2, 3, 4), (-1, -2, -4)])
    )
    assert three.graph.n == 29


def test_kemeny_battery(rng):
    for _ in range(BATTERY):
        g = random_digraph(rng.randrange(2, 7), rng)
        if g.arc_count == 0:
            continue
        out = kemeny_subdivide(g)
        assert out.witness.k == 4
        assert out.decision_vertex is None
        assert out.graph.n == g.n + g.arc_count
        assert_block_structure(out)


def test_kemeny_subdivision_shape():
    g = Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])
    out = kemeny_subdivide(g)
    # each original arc becomes a length-2 path through a fresh midpoint
    assert out.graph.n == 6
    assert out.graph.arc_count == 6
    for idx, (a, b) in enumerate(g.arcs()):
        mid = 3 + idx
        assert out.graph.has_arc(a, mid)
        assert out.graph.has_arc(mid, b)


def test_kemeny_preserves_min_fas(rng):
    for _ in range(12):
        g = random_digraph(rng.randrange(3, 7), rng)
        if not 0 < g.arc_count <= 10:
            continue
        out = kemeny_subdivide(g)
        assert min_fas_size(out.graph) == min_fas_size(g)


def test_slater_battery(rng):
    for _ in range(BATTERY):
        f = random_reduced_formula(rng)
        out = slater_tournament(f)
        assert out.witness.k == 7
        assert out.decision_vertex is None  # decided by score, not a vertex
        assert out.graph.is_tournament()
        # conflicting blocks by design: the trace is checked through margins
        blocks = dict(out.block_trace)
        w = weighted_majority(out.witness)
        for u, v in out.graph.arcs():
            margin = 1 if blocks["E1"].has_arc(u, v) else -1
            for name in ("E2", "E3", "E4"):
                if blocks[name].has_arc(u, v):
                    margin += 2
                elif blocks[name].has_arc(v, u):
                    margin -= 2
            assert margin == 1
            assert w.weight(u, v) == 1


def test_slater_rejects_unreduced_and_wide():
    with pytest.raises(ValueError):
        slater_tournament(ThreeCnf.of(3, [(1, 2, 3), (-1, -2, -3)]))
    with pytest.raises(ValueError):
        slater_tournament(ThreeCnf.of(1, [(1,)]))
    with pytest.raises(ValueError):
        slater_tournament(ThreeCnf.of(2, [(1, 2)]), component_size=0)


def test_slater_component_expansion():
    f = to_reducedfew(ThreeCnf.of(3, [(1, 2, 3)]))
    small = slater_tournament(f)
    big = slater_tournament(f, component_size=2)
    assert small.graph.n == 19
    assert big.graph.n == 37  # every non-decision vertex doubled
    assert big.witness.k == 7
    w = weighted_majority(big.witness)
    assert all(w.weight(u, v) == 1 for u, v in big.graph.arcs())


def test_rp_digraph_battery(rng):
    for _ in range(BATTERY):
        f = random_three_cnf(
            rng, rng.randrange(3, 6), rng.randrange(1, 7), exactly_three=True
        )
        out = rp_digraph(f)
        assert out.witness.k == 8
        assert out.decision_vertex == 0
        assert isinstance(out.graph, WeightedDigraph)
        weights = {w for _, _, w in out.graph.positive_arcs()}
        assert weights <= {2, 4}
        assert_block_structure(out)


def test_rp_digraph_shape():
    out = rp_digraph(ThreeCnf.of(3, [(1, 2, 3)]))
    assert out.graph.n == 1 + 4 * 3 + 1


def test_rp_tournament_battery(rng):
    for _ in range(BATTERY):
        f = random_three_cnf(
            rng, rng.randrange(3, 6), rng.randrange(1, 7), exactly_three=True
        )
        out = rp_tournament(f)
        assert out.witness.k == 11
        assert out.decision_vertex == 0
        assert isinstance(out.graph, WeightedDigraph)
        assert out.graph.arc_digraph().is_tournament()
        weights = {w for _, _, w in out.graph.positive_arcs()}
        assert weights <= {1, 3, 5}
        assert_block_structure(out)


def test_rp_rejects_empty():
    with pytest.raises(ValueError):
        rp_digraph(ThreeCnf.of(3, []))


# ---------------------------------------------------------------------------
# desk-scale semantics
#
# Reduced-occurrence admissibility keeps unsatisfiable inputs above the
# feedback-arc-set DP's 16-vertex cap, so only the satisfiable side of the
# score correspondence is observable here.  What is checkable: every
# single-clause two-variable instance lands on the same optimal score
# regardless of literal signs (satisfiability never varies, so the score
# must not either), and that score is met, not beaten.


def test_slater_score_is_sign_invariant_at_desk_scale():
    scores = set()
    for signs in itertools.product((1, -1), repeat=2):
        f = ThreeCnf.of(2, [(signs[0] * 1, signs[1] * 2)])
        assert brute_force_sat(f)
        out = slater_tournament(f)
        assert out.graph.n == 13
        scores.add(min_fas_size(out.graph))
    assert scores == {7}
