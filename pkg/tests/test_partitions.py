import json

import pytest
from hypothesis import given, strategies as st

from tableauwalk.oracles import brute_force_corners, brute_force_syt_count
from tableauwalk.partitions import (
    Corner,
    InvalidCornerError,
    Partition,
    addable_corners,
    apply_corner,
    partitions_of,
    removable_corners,
    syt_count,
)


@st.composite
def partitions(draw, max_size=10):
    k = draw(st.integers(min_value=0, max_value=max_size))
    return draw(st.sampled_from(partitions_of(k)))


def cells(corners):
    return [(c.row, c.col) for c in corners]


def test_canonical_form():
    assert Partition([2, 1, 0, 0]) == Partition([2, 1])
    assert Partition() == Partition([]) == ()
    assert Partition([3, 1]).size == 4
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_json_round_trip():
    assert json.dumps(list(Partition([2, 1]))) == "[2, 1]"
    assert json.dumps(list(Partition())) == "[]"


@pytest.mark.parametrize(
    "parts, expected",
    [((), []), ((2, 1), [(0, 1), (1, 0)]), ((3, 3, 1), [(1, 2), (2, 0)])],
)
def test_removable_corners(parts, expected):
    assert cells(removable_corners(Partition(parts))) == expected


@pytest.mark.parametrize(
    "parts, expected",
    [((), [(0, 0)]), ((1,), [(0, 1), (1, 0)]), ((2, 1), [(0, 2), (1, 1), (2, 0)])],
)
def test_addable_corners(parts, expected):
    assert cells(addable_corners(Partition(parts))) == expected


@pytest.mark.parametrize("parts, expected", [((), 1), ((2, 1), 2), ((3, 2), 5)])
def test_syt_count_examples(parts, expected):
    assert syt_count(Partition(parts)) == expected


@pytest.mark.parametrize("k", range(0, 8))
def test_syt_count_matches_brute_force_fillings(k):
    for p in partitions_of(k):
        assert syt_count(p) == brute_force_syt_count(p)


def test_apply_corner_examples():
    assert apply_corner(Partition([2, 1]), Corner(1, 0, "removable")) == Partition([2])
    assert apply_corner(Partition([2, 1]), Corner(0, 2, "addable")) == Partition([3, 1])
    assert apply_corner(Partition([1, 1]), Corner(2, 0, "addable")) == Partition([1, 1, 1])


@pytest.mark.parametrize(
    "parts, corner",
    [
        ((2, 1), Corner(0, 0, "removable")),
        ((2, 2), Corner(1, 2, "addable")),
        ((), Corner(0, 0, "removable")),
        ((1,), Corner(0, 1, "sideways")),
    ],
)
def test_apply_corner_rejects_invalid(parts, corner):
    with pytest.raises(InvalidCornerError):
        apply_corner(Partition(parts), corner)


def test_addable_count_is_distinct_parts_plus_one():
    for k in range(9):
        for p in partitions_of(k):
            assert len(addable_corners(p)) == len(set(p)) + 1


@pytest.mark.parametrize("k", range(0, 11))
def test_corners_agree_with_brute_force_edits(k):
    for p in partitions_of(k):
        removable, addable = brute_force_corners(p)
        assert cells(removable_corners(p)) == removable
        assert cells(addable_corners(p)) == addable


@given(partitions(max_size=8))
def test_branching_rule_down(p):
    if p.size == 0:
        return
    below = [apply_corner(p, c) for c in removable_corners(p)]
    assert syt_count(p) == sum(syt_count(mu) for mu in below)


@given(partitions(max_size=8))
def test_branching_rule_up(p):
    above = [apply_corner(p, c) for c in addable_corners(p)]
    assert (p.size + 1) * syt_count(p) == sum(syt_count(mu) for mu in above)


@given(partitions(max_size=10), st.data())
def test_add_then_remove_is_identity(p, data):
    c = data.draw(st.sampled_from(addable_corners(p)))
    q = apply_corner(p, c)
    assert q.size == p.size + 1
    assert apply_corner(q, Corner(c.row, c.col, "removable")) == p


def test_partitions_of_counts():
    # p(k) for k = 0..10
    assert [len(partitions_of(k)) for k in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
