"""Preference profiles, majority margins, and the per-arc voter-pair construction."""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Digraph, WeightedDigraph

# ranking as a tuple of vertex ids, best first
LinearOrder = tuple[int, ...]


@dataclass(frozen=True)
class Profile:
    n: int
    voters: tuple[LinearOrder, ...]

    def __post_init__(self):
        if len(self.voters) < 1:
            raise ValueError("a profile needs at least one voter")
        ref = list(range(self.n))
        for order in self.voters:
            if sorted(order) != ref:
                raise ValueError("each ranking must be a permutation of 0..n-1")

    @property
    def k(self) -> int:
        return len(self.voters)

    @staticmethod
    def of(n: int, *orders) -> "Profile":
        return Profile(n, tuple(tuple(o) for o in orders))


def _margin_matrix(p: Profile) -> list[list[int]]:
    n = p.n
    w = [[0] * n for _ in range(n)]
    for order in p.voters:
        pos = [0] * n
        for rank, v in enumerate(order):
            pos[v] = rank
        for u in range(n):
            for v in range(u + 1, n):
                if pos[u] < pos[v]:
                    w[u][v] += 1
                    w[v][u] -= 1
                else:
                    w[v][u] += 1
                    w[u][v] -= 1
    return w


def weighted_majority(p: Profile) -> WeightedDigraph:
    """Margins w(u,v) = #voters preferring u to v minus the reverse count."""
    return WeightedDigraph(p.n, tuple(tuple(r) for r in _margin_matrix(p)))


def majority_digraph(p: Profile) -> Digraph:
    """Arc u->v iff strictly more voters rank u above v."""
    w = _margin_matrix(p)
    rows = [0] * p.n
    for u in range(p.n):
        for v in range(p.n):
            if w[u][v] > 0:
                rows[u] |= 1 << v
    return Digraph(p.n, tuple(rows))


def induces(p: Profile, g) -> bool:
    """Does the profile's (weighted) majority equal g exactly?"""
    if isinstance(g, WeightedDigraph):
        if p.n != g.n:
            raise ValueError("vertex counts differ")
        return weighted_majority(p) == g
    if isinstance(g, Digraph):
        if p.n != g.n:
            raise ValueError("vertex counts differ")
        return majority_digraph(p) == g
    raise TypeError("expected Digraph or WeightedDigraph")


def mcgarvey_profile(g: Digraph) -> Profile:
    """Profile with two voters per arc inducing g, every arc at margin 2.

    For arc (u,v): one voter ranks u,v on top then the rest ascending by id,
    the other ranks the rest descending, then u,v.  The pair agrees only on
    u over v; everything else cancels.
    """
    n = g.n
    voters: list[LinearOrder] = []
    for u, v in g.arcs():
        rest = [x for x in range(n) if x != u and x != v]
        voters.append(tuple([u, v] + rest))
        voters.append(tuple(rest[::-1] + [u, v]))
    if not voters:
        asc = tuple(range(n))
        voters = [asc, asc[::-1]]
    return Profile(n, tuple(voters))


# --- text format ----------------------------------------------------------
#
# line 1 "n k", then k lines of space-separated vertex ids, best first.


def profile_to_text(p: Profile) -> str:
    lines = ["%d %d" % (p.n, p.k)]
    lines += [" ".join(str(v) for v in order) for order in p.voters]
    return "\n".join(lines) + "\n"


def profile_from_text(text: str) -> Profile:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append([int(tok) for tok in line.split()])
    if not rows or len(rows[0]) != 2:
        raise ValueError("missing 'n k' header line")
    n, k = rows[0]
    if len(rows) - 1 != k:
        raise ValueError("expected %d ranking lines, got %d" % (k, len(rows) - 1))
    return Profile(n, tuple(tuple(r) for r in rows[1:]))
