"""Counting arguments bounding what k voters can express.

A profile of k voters on m alternatives is one of (m!)^k objects, while
labeled tournaments on m vertices number 2^C(m,2).  Once

    2^C(m,2) * k!  >  2^k * (m!)^k

the profiles (even granting a factor k! of voter reorderings and a
factor 2^k of global reversals) cannot cover the tournaments, so some
m-vertex tournament is not k-inducible.  The threshold scan runs on
floating-point logarithms and the verdict at the boundary is confirmed
with exact big-integer arithmetic, so rounding cannot shift the answer.
"""

from __future__ import annotations

import math


def _holds_exact(m: int, k: int) -> bool:
    """Exact form of the covering inequality at size m."""
    return 2 ** (m * (m - 1) // 2) * math.factorial(k) <= 2**k * (
        math.factorial(m) ** k
    )


def expressiveness_upper_bound(k: int) -> int:
    """Largest m for which k voters could still cover all m-tournaments.

    Returns m - 1 where m is the least size violating the covering
    inequality; a tournament of size m that is not k-inducible must
    exist.  k must be odd and at least 3.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError("k must be odd and >= 3, got %d" % k)
    log2 = math.log(2.0)
    log_kfact = math.lgamma(k + 1)
    log_mfact = 0.0  # ln m!
    m = 1
    held = False
    # For m below roughly k the k! slack alone already violates the
    # inequality, so the scan looks for the upper boundary: the first
    # violation after the inequality has held at all.
    while True:
        m += 1
        log_mfact += math.log(m)
        lhs = m * (m - 1) / 2 * log2
        rhs = k * (log2 + log_mfact) - log_kfact
        if lhs <= rhs:
            held = True
        elif held:
            break
    # The float scan locates the boundary; the verdict itself is exact.
    while not _holds_exact(m - 1, k):
        m -= 1
    while _holds_exact(m, k):
        m += 1
    return m - 1


def profile_count(n: int, k: int) -> int:
    """Number of profiles of k ordered voters on n alternatives."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    return math.factorial(n) ** k


def labeled_tournament_count(n: int) -> int:
    """Number of labeled tournaments on n vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    return 2 ** (n * (n - 1) // 2)
