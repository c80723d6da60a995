"""Integer partitions and Young diagram combinatorics.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  The same tuple doubles as a
Young diagram (row lengths, English convention) and as the cycle type of
a conjugacy class of the symmetric group.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial
from typing import Iterable, NamedTuple

Partition = tuple[int, ...]


class StripRemoval(NamedTuple):
    """One way to peel a border strip off a diagram.

    remainder: the partition left behind.
    height: number of rows the strip occupies, minus one.
    """

    remainder: Partition
    height: int


def as_partition(parts: Iterable[int]) -> Partition:
    """Validate an iterable of parts and return it as a canonical tuple."""
    p = tuple(int(x) for x in parts)
    for i, x in enumerate(p):
        if x < 1:
            raise ValueError(f"parts must be positive integers, got {p}")
        if i and p[i - 1] < x:
            raise ValueError(f"parts must be weakly decreasing, got {p}")
    return p


@cache
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, ordered lexicographically decreasing.

    enumerate_partitions(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    """
    if n < 0:
        raise ValueError("n must be non-negative")

    out: list[Partition] = []

    def descend(remaining: int, largest: int, prefix: Partition) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            descend(remaining - part, part, prefix + (part,))

    descend(n, max(n, 1), ())
    return tuple(out)


def conjugate(zeta: Partition) -> Partition:
    """Transpose the diagram: conjugate(zeta)[j] counts parts greater than j."""
    if not zeta:
        return ()
    return tuple(sum(1 for part in zeta if part > j) for j in range(zeta[0]))


def sign_of_class(gamma: Partition) -> int:
    """Sign of any permutation with cycle type gamma: (-1)**(n - cycles)."""
    return -1 if (sum(gamma) - len(gamma)) % 2 else 1


def part_counts(gamma: Partition) -> Counter[int]:
    """Multiplicity map: part_counts(gamma)[i] is the number of parts equal to i."""
    return Counter(gamma)


def hook_lengths(zeta: Partition) -> list[list[int]]:
    """Hook length of every box, row by row: arm + leg + 1."""
    conj = conjugate(zeta)
    return [
        [zeta[i] - j + conj[j] - i - 1 for j in range(zeta[i])]
        for i in range(len(zeta))
    ]


@cache
def dimension(zeta: Partition) -> int:
    """Dimension of the irreducible S_n module labelled by zeta.

    Hook length formula: n! divided by the product of all hook lengths.
    The division is checked to be exact.
    """
    denom = 1
    for row in hook_lengths(zeta):
        for h in row:
            denom *= h
    dim, rem = divmod(factorial(sum(zeta)), denom)
    if rem:
        raise AssertionError(f"hook product does not divide n! for {zeta}")
    return dim


def border_strip_removals(zeta: Partition, size: int) -> list[StripRemoval]:
    """Every way to remove a border strip of `size` boxes from zeta.

    A border strip is an edge-connected skew diagram containing no 2x2
    block.  A removable strip whose topmost box sits in row i corresponds
    to a box of hook length `size` in row i; since hook lengths strictly
    decrease along a row there is at most one per row.  If that box sits
    in column j (0-based) and the strip bottoms out in row q, the
    remainder keeps rows above i, shifts rows i..q-1 up along the rim,
    and truncates row q at column j.

    Results are ordered by the strip's top row.
    """
    if size < 1:
        raise ValueError("strip size must be positive")
    conj = conjugate(zeta)
    out: list[StripRemoval] = []
    for i in range(len(zeta)):
        for j in range(zeta[i]):
            h = zeta[i] - j + conj[j] - i - 1
            if h < size:
                break
            if h == size:
                q = conj[j] - 1
                rows = list(zeta)
                for r in range(i, q):
                    rows[r] = zeta[r + 1] - 1
                rows[q] = j
                while rows and rows[-1] == 0:
                    rows.pop()
                out.append(StripRemoval(tuple(rows), q - i))
                break
    return out
