"""Partition layer, checked against independent combinatorial oracles."""

import pytest
from hypothesis import given, strategies as st

from sncayley.partitions import (
    StripRemoval,
    as_partition,
    border_strip_removals,
    conjugate,
    dimension,
    enumerate_partitions,
    hook_lengths,
    part_counts,
    sign_of_class,
)


def partition_count(n, _memo={0: 1}):
    """Number of partitions of n via the pentagonal number recurrence.

    Completely independent of the enumerator under test.
    """
    if n < 0:
        return 0
    if n in _memo:
        return _memo[n]
    total = 0
    k = 1
    while k * (3 * k - 1) // 2 <= n:
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - k * (3 * k - 1) // 2)
        total += sign * partition_count(n - k * (3 * k + 1) // 2)
        k += 1
    _memo[n] = total
    return total


@st.composite
def partitions(draw, max_n=14):
    n = draw(st.integers(min_value=0, max_value=max_n))
    parts = []
    remaining, largest = n, n
    while remaining:
        part = draw(st.integers(min_value=1, max_value=min(largest, remaining)))
        parts.append(part)
        remaining -= part
        largest = part
    return tuple(parts)


def brute_strip_removals(zeta, size):
    """Border strip removals by definition: try every sub-partition, keep
    the skew shapes that are edge-connected and contain no 2x2 block."""
    n = sum(zeta)
    if size > n:
        return set()
    found = set()
    for mu in enumerate_partitions(n - size):
        if len(mu) > len(zeta) or any(mu[i] > zeta[i] for i in range(len(mu))):
            continue
        boxes = {
            (i, j)
            for i in range(len(zeta))
            for j in range(zeta[i])
            if i >= len(mu) or j >= mu[i]
        }
        frontier = [next(iter(boxes))]
        seen = {frontier[0]}
        while frontier:
            i, j = frontier.pop()
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in boxes and nb not in seen:
                    seen.add(nb)
                    frontier.append(nb)
        if seen != boxes:
            continue
        if any(
            {(i, j), (i, j + 1), (i + 1, j), (i + 1, j + 1)} <= boxes
            for (i, j) in boxes
        ):
            continue
        found.add((mu, len({i for i, _ in boxes}) - 1))
    return found


def test_enumeration_order_small():
    assert enumerate_partitions(0) == ((),)
    assert enumerate_partitions(1) == ((1,),)
    assert enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_enumeration_is_lex_decreasing():
    parts = enumerate_partitions(9)
    assert all(parts[i] > parts[i + 1] for i in range(len(parts) - 1))


@pytest.mark.parametrize("n", range(0, 31))
def test_enumeration_count_matches_pentagonal_recurrence(n):
    assert len(enumerate_partitions(n)) == partition_count(n)


def test_as_partition_validates():
    assert as_partition([3, 1, 1]) == (3, 1, 1)
    assert as_partition(()) == ()
    with pytest.raises(ValueError):
        as_partition([1, 2])
    with pytest.raises(ValueError):
        as_partition([2, 0])
    with pytest.raises(ValueError):
        as_partition([-1])


def test_conjugate_known_values():
    assert conjugate((3, 3, 2, 1)) == (4, 3, 2)
    assert conjugate((5,)) == (1, 1, 1, 1, 1)
    assert conjugate(()) == ()


def test_conjugate_matches_box_transpose():
    for zeta in enumerate_partitions(8):
        boxes = {(i, j) for i in range(len(zeta)) for j in range(zeta[i])}
        transposed = {(j, i) for (i, j) in boxes}
        rows = sorted({i for i, _ in transposed})
        expected = tuple(sum(1 for (i, _) in transposed if i == r) for r in rows)
        assert conjugate(zeta) == expected


@given(partitions())
def test_conjugate_is_involution(zeta):
    assert conjugate(conjugate(zeta)) == zeta
    assert sum(conjugate(zeta)) == sum(zeta)


def test_sign_of_class():
    assert sign_of_class((2, 1, 1)) == -1
    assert sign_of_class((3, 1)) == 1
    assert sign_of_class((1, 1, 1, 1)) == 1
    assert sign_of_class((6, 1)) == -1
    assert sign_of_class(()) == 1


def test_part_counts():
    counts = part_counts((5, 3, 3, 1, 1, 1))
    assert counts[1] == 3 and counts[3] == 2 and counts[5] == 1
    assert counts[2] == 0


def test_hook_lengths_examples():
    assert hook_lengths((1,)) == [[1]]
    assert hook_lengths((3,)) == [[3, 2, 1]]
    # row 2, column 2 of (4,4,3,3,3,1), 1-based
    assert hook_lengths((4, 4, 3, 3, 3, 1))[1][1] == 6
    assert hook_lengths((2, 1)) == [[3, 1], [1]]


def test_dimension_small_and_polynomial_families():
    assert dimension(()) == 1
    assert dimension((1,)) == 1
    assert dimension((4, 2)) == 9
    assert dimension((2, 2)) == 2
    for n in range(3, 15):
        assert dimension((n,)) == 1
        assert dimension((n - 1, 1)) == n - 1
        assert dimension((n - 2, 1, 1)) == (n - 1) * (n - 2) // 2


@pytest.mark.parametrize("n", range(1, 15))
def test_dimension_squares_sum_to_factorial(n):
    from math import factorial

    assert sum(dimension(z) ** 2 for z in enumerate_partitions(n)) == factorial(n)


def test_dimension_invariant_under_conjugation():
    for n in range(1, 13):
        for zeta in enumerate_partitions(n):
            assert dimension(conjugate(zeta)) == dimension(zeta)


def test_border_strip_examples():
    # the whole diagram of a hook is itself a border strip
    assert border_strip_removals((3, 1, 1), 5) == [StripRemoval((), 2)]
    # removing a single box finds exactly the corners
    assert border_strip_removals((3, 2), 1) == [
        StripRemoval((2, 2), 0),
        StripRemoval((3, 1), 0),
    ]
    # (2,2) minus a 3-strip leaves (1): the strip hooks around the corner
    assert border_strip_removals((2, 2), 3) == [StripRemoval((1,), 1)]
    # the whole of (2,2) is a 2x2 block, which no border strip may contain
    assert border_strip_removals((2, 2), 4) == []
    # no strip of size 3 fits inside a single row of 2
    assert border_strip_removals((2,), 3) == []
    with pytest.raises(ValueError):
        border_strip_removals((2, 2), 0)


def test_border_strips_match_brute_force():
    for n in range(1, 11):
        for zeta in enumerate_partitions(n):
            for size in range(1, n + 1):
                got = border_strip_removals(zeta, size)
                assert len(set(got)) == len(got)
                assert set(got) == brute_strip_removals(zeta, size), (zeta, size)


@given(partitions(max_n=10), st.integers(min_value=1, max_value=10))
def test_border_strip_remainders_are_partitions(zeta, size):
    for remainder, height in border_strip_removals(zeta, size):
        assert as_partition(remainder) == remainder
        assert sum(remainder) == sum(zeta) - size
        assert 0 <= height < max(len(zeta), 1)
