"""Size bounds for non-k-inducible digraphs and profile counting."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from majdim import (
    expressiveness_upper_bound,
    labeled_tournament_count,
    profile_count,
)
from majdim.bounds import _holds_exact

TABLE = {
    3: 18,
    5: 41,
    7: 66,
    9: 93,
    11: 122,
    13: 152,
    15: 183,
    17: 216,
    19: 249,
    21: 282,
}


def test_reference_table():
    for k, m in TABLE.items():
        assert expressiveness_upper_bound(k) == m


def test_bound_rejects_even_or_tiny_k():
    with pytest.raises(ValueError):
        expressiveness_upper_bound(4)
    with pytest.raises(ValueError):
        expressiveness_upper_bound(1)


@given(st.sampled_from([3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25]))
def test_bound_sits_on_the_exact_boundary(k):
    m = expressiveness_upper_bound(k)
    # the covering inequality holds at the returned size and fails just above
    assert _holds_exact(m, k)
    assert not _holds_exact(m + 1, k)


def test_bound_is_monotone_in_k():
    values = [expressiveness_upper_bound(k) for k in range(3, 31, 2)]
    assert values == sorted(values)
    assert len(set(values)) == len(values)


def test_the_inequality_is_not_monotone_in_m():
    # the k! factor dominates small m, so a naive first-violation scan
    # would stop immediately; the implementation must skip that regime
    assert not _holds_exact(1, 21)
    assert _holds_exact(100, 21)
    assert not _holds_exact(400, 21)


def test_profile_count_values():
    assert profile_count(5, 1) == 120
    assert profile_count(5, 3) == 1_728_000
    assert profile_count(3, 2) == 36
    assert profile_count(4, 3) == math.factorial(4) ** 3


def test_labeled_tournament_count():
    assert [labeled_tournament_count(n) for n in (1, 2, 3, 4, 5)] == [
        1,
        2,
        8,
        64,
        1024,
    ]
