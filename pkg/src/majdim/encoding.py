"""CNF encodings of the k-voter inducibility decision problem.

Given a digraph G and a voter count k, build a propositional formula that is
satisfiable iff some k-voter profile of linear orders has majority digraph
exactly G.  Two modes are provided:

``paper_faithful``
    One variable r_{i,a,b} per voter and ordered vertex pair, including the
    diagonal.  Linear-order axioms are instantiated over their full index
    ranges (the transitivity scheme over all n^3 ordered triples, degenerate
    instances included), majority and indifference thresholds are encoded as
    disjunctions over voter subsets with one auxiliary variable per subset
    and pair slot.  Formula sizes follow closed forms and are checked by the
    test suite; this mode is the oracle.

``optimized``
    Antisymmetry and completeness are folded into the literal structure,
    r_{i,b,a} = -r_{i,a,b}, so each voter contributes C(n,2) primary
    variables.  Transitivity needs only the two cycle-forbidding clauses per
    unordered triple, and subset auxiliaries are allocated lazily.  This mode
    is the workhorse for search.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .cnf import CnfFormula
from .digraph import Digraph
from .profiles import Profile

MODES = ("paper_faithful", "optimized")


def majority_threshold(k: int) -> int:
    """Smallest number of voters forming a strict majority among k."""
    return k // 2 + 1


class ParityError(ValueError):
    """Voter count has the wrong parity for the digraph's completeness."""


class ModelInconsistencyError(RuntimeError):
    """A model violates the linear-order axioms it was meant to satisfy.

    Raised by :func:`decode_model`; indicates an encoder or solver bug, not
    bad user input.
    """


def _check_parity(g: Digraph, k: int) -> None:
    if k < 1:
        raise ValueError("voter count must be positive, got %d" % k)
    if g.is_tournament():
        if k % 2 == 0:
            raise ParityError(
                "a tournament needs an odd number of voters, got k=%d" % k
            )
    elif k % 2 == 1:
        raise ParityError(
            "an incomplete digraph needs an even number of voters, got k=%d" % k
        )


@dataclass(frozen=True)
class VarMap:
    """Mapping between DIMACS variables and preference statements.

    ``preference_literal(i, a, b)`` is the literal that is true exactly when
    voter i ranks a above b.  In faithful mode every ordered pair (diagonal
    included) owns a positive variable; in optimized mode only pairs a < b
    do, and the converse direction is the negated literal.
    """

    n: int
    k: int
    mode: str
    num_vars: int

    def preference_literal(self, voter: int, a: int, b: int) -> int:
        n = self.n
        if not (0 <= voter < self.k and 0 <= a < n and 0 <= b < n):
            raise ValueError("index out of range")
        if self.mode == "paper_faithful":
            return 1 + voter * n * n + a * n + b
        if a == b:
            raise ValueError("optimized mode has no diagonal variables")
        if a < b:
            return 1 + voter * comb(n, 2) + _pair_index(n, a, b)
        return -(1 + voter * comb(n, 2) + _pair_index(n, b, a))


def _pair_index(n: int, a: int, b: int) -> int:
    # Rank of (a, b), a < b, in lexicographic order over all such pairs.
    return a * n - a * (a + 1) // 2 + (b - a - 1)


def _missing_pairs(g: Digraph) -> list[tuple[int, int]]:
    return [
        (x, y)
        for x in range(g.n)
        for y in range(x + 1, g.n)
        if not g.has_arc(x, y) and not g.has_arc(y, x)
    ]


def _encode_faithful(g: Digraph, k: int) -> tuple[CnfFormula, VarMap]:
    n = g.n
    m = majority_threshold(k)
    subsets = list(itertools.combinations(range(k), m))
    slot = n * n

    def r(i: int, a: int, b: int) -> int:
        return 1 + i * slot + a * n + b

    maj_base = 1 + k * slot

    def s(mi: int, a: int, b: int) -> int:
        return maj_base + mi * slot + a * n + b

    tournament = g.is_tournament()
    clauses: list[tuple[int, ...]] = []
    for i in range(k):
        for x in range(n):
            clauses.append((r(i, x, x),))
        for x in range(n):
            for y in range(x + 1, n):
                clauses.append((r(i, x, y), r(i, y, x)))
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    clauses.append((-r(i, x, y), -r(i, y, z), r(i, x, z)))
        for x in range(n):
            for y in range(x + 1, n):
                clauses.append((-r(i, x, y), -r(i, y, x)))
    for x, y in g.arcs():
        clauses.append(tuple(s(mi, x, y) for mi in range(len(subsets))))
        for mi, subset in enumerate(subsets):
            for i in subset:
                clauses.append((-s(mi, x, y), r(i, x, y)))
    num_vars = k * slot + len(subsets) * slot
    if not tournament:
        half_subsets = list(itertools.combinations(range(k), k // 2))
        ind_base = 1 + num_vars

        def t(mi: int, a: int, b: int) -> int:
            return ind_base + mi * slot + a * n + b

        for x, y in _missing_pairs(g):
            for a, b in ((x, y), (y, x)):
                clauses.append(
                    tuple(t(mi, a, b) for mi in range(len(half_subsets)))
                )
                for mi, subset in enumerate(half_subsets):
                    for i in subset:
                        clauses.append((-t(mi, a, b), r(i, a, b)))
        num_vars += len(half_subsets) * slot
    vm = VarMap(n=n, k=k, mode="paper_faithful", num_vars=num_vars)
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses)), vm


def _encode_optimized(
    g: Digraph, k: int, symmetry_break_voters: bool
) -> tuple[CnfFormula, VarMap]:
    n = g.n
    m = majority_threshold(k)
    pairs = comb(n, 2)
    next_var = 1 + k * pairs
    vm_lit = VarMap(n=n, k=k, mode="optimized", num_vars=0).preference_literal

    clauses: list[tuple[int, ...]] = []
    for i in range(k):
        for x, y, z in itertools.combinations(range(n), 3):
            xy, yz, xz = vm_lit(i, x, y), vm_lit(i, y, z), vm_lit(i, x, z)
            clauses.append((-xy, -yz, xz))
            clauses.append((xy, yz, -xz))

    def at_least(count: int, a: int, b: int) -> None:
        nonlocal next_var
        aux = []
        for subset in itertools.combinations(range(k), count):
            sv = next_var
            next_var += 1
            aux.append(sv)
            for i in subset:
                clauses.append((-sv, vm_lit(i, a, b)))
        clauses.append(tuple(aux))

    for x, y in g.arcs():
        at_least(m, x, y)
    if not g.is_tournament():
        for x, y in _missing_pairs(g):
            at_least(k // 2, x, y)
            at_least(k // 2, y, x)

    if symmetry_break_voters and k > 1 and pairs > 0:
        order = list(itertools.combinations(range(n), 2))
        for i in range(k - 1):
            xs = [vm_lit(i, a, b) for a, b in order]
            ys = [vm_lit(i + 1, a, b) for a, b in order]
            clauses.append((xs[0], -ys[0]))
            prev_eq = None
            for j in range(1, pairs):
                eq = next_var
                next_var += 1
                clauses.append((-eq, -xs[j - 1], ys[j - 1]))
                clauses.append((-eq, xs[j - 1], -ys[j - 1]))
                if prev_eq is not None:
                    clauses.append((-eq, prev_eq))
                clauses.append((-eq, xs[j], -ys[j]))
                prev_eq = eq

    num_vars = next_var - 1
    vm = VarMap(n=n, k=k, mode="optimized", num_vars=num_vars)
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses)), vm


def encode_check_k(
    g: Digraph,
    k: int,
    mode: str = "optimized",
    symmetry_break_voters: bool = False,
) -> tuple[CnfFormula, VarMap]:
    """Encode "is g the majority digraph of some k-voter profile" as CNF.

    The formula is satisfiable iff such a profile exists; a model decodes to
    one via decode_model.  k must have the parity forced by g: odd for
    tournaments, even otherwise (a ParityError is raised if not, since no
    profile of the wrong parity can produce the required strict majorities
    and ties).  symmetry_break_voters adds lexicographic ordering chains
    between consecutive voters (optimized mode only); it prunes permutations
    of the same profile without affecting satisfiability.
    """
    if mode not in MODES:
        raise ValueError("unknown mode %r" % (mode,))
    _check_parity(g, k)
    if mode == "paper_faithful":
        return _encode_faithful(g, k)
    return _encode_optimized(g, k, symmetry_break_voters)


def decode_model(
    model: dict[int, bool], vm: VarMap, n: int, k: int
) -> Profile:
    """Read a satisfying assignment back into a k-voter profile.

    Validates that every voter's relation is a strict linear order; a
    violation means the encoder emitted a wrong formula or the solver
    returned a bogus model, so it raises ModelInconsistencyError rather
    than a user-facing error.
    """
    if (n, k) != (vm.n, vm.k):
        raise ValueError("VarMap was built for n=%d, k=%d" % (vm.n, vm.k))

    def holds(lit: int) -> bool:
        value = model.get(abs(lit), False)
        return value if lit > 0 else not value

    voters = []
    for i in range(k):
        wins = [0] * n
        for a in range(n):
            for b in range(a + 1, n):
                ab = holds(vm.preference_literal(i, a, b))
                ba = holds(vm.preference_literal(i, b, a))
                if ab == ba:
                    raise ModelInconsistencyError(
                        "voter %d ranks %d and %d inconsistently" % (i, a, b)
                    )
                wins[a if ab else b] += 1
        if sorted(wins) != list(range(n)):
            raise ModelInconsistencyError(
                "voter %d relation is not transitive" % i
            )
        voters.append(tuple(sorted(range(n), key=lambda v: -wins[v])))
    return Profile(n=n, voters=tuple(voters))
