"""Exact spectra of normal Cayley graphs on the symmetric group.

The connection set is a union of full conjugacy classes of cycles, so
the graph's eigenvalues are indexed by the irreducible modules: the
eigenvalue at zeta is the sum over selected cycle lengths k of

    (number of k-cycles) * character(zeta, k-cycle class) / dimension(zeta)

and each eigenvalue occurs with multiplicity dimension(zeta)**2.  Every
such eigenvalue is an algebraic integer and a rational, hence an
ordinary integer; the code verifies the denominator really cancels and
treats any failure as an internal error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import cache
from typing import Iterator, NamedTuple

from .characters import normalized_character
from .partitions import Partition, dimension, enumerate_partitions


class InternalConsistencyError(RuntimeError):
    """An exact-arithmetic identity that must always hold was violated."""


@dataclass(frozen=True)
class ConnectionSpec:
    """The graph Cay(S_n, all cycles whose length lies in `lengths`)."""

    n: int
    lengths: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lengths", frozenset(int(k) for k in self.lengths))
        if self.n < 2:
            raise ValueError(f"n must be at least 2, got {self.n}")
        if not self.lengths:
            raise ValueError("connection set needs at least one cycle length")
        bad = sorted(k for k in self.lengths if not 2 <= k <= self.n)
        if bad:
            raise ValueError(f"cycle lengths must lie in 2..{self.n}, got {bad}")

    @property
    def sorted_lengths(self) -> tuple[int, ...]:
        return tuple(sorted(self.lengths))


class SpectrumEntry(NamedTuple):
    zeta: Partition
    eigenvalue: int
    dimension: int
    multiplicity: int


@dataclass(frozen=True)
class SpectralSummary:
    """The strictly second largest eigenvalue and what hangs off it."""

    degree: int
    components: int
    second_value: int
    attaining: tuple[Partition, ...]
    second_multiplicity: int
    aldous: bool
    cheeger_lower: Fraction
    cheeger_upper: Decimal


def cycle_class(n: int, k: int) -> Partition:
    """Cycle type (k, 1^(n-k)) of a k-cycle in S_n."""
    if not 2 <= k <= n:
        raise ValueError(f"cycle length {k} out of range 2..{n}")
    return (k,) + (1,) * (n - k)


def class_size(n: int, k: int) -> int:
    """Number of k-cycles in S_n: binomial(n, k) * (k-1)!."""
    if not 2 <= k <= n:
        raise ValueError(f"cycle length {k} out of range 2..{n}")
    return math.comb(n, k) * math.factorial(k - 1)


def degree(spec: ConnectionSpec) -> int:
    """Size of the connection set; the graph is regular of this degree."""
    return sum(class_size(spec.n, k) for k in spec.sorted_lengths)


@cache
def _term(n: int, k: int, zeta: Partition) -> Fraction:
    return class_size(n, k) * normalized_character(zeta, cycle_class(n, k))


def eigenvalue(zeta: Partition, spec: ConnectionSpec) -> int:
    """Exact eigenvalue of the graph at the irreducible module zeta."""
    zeta = tuple(zeta)
    if sum(zeta) != spec.n:
        raise ValueError(f"zeta must partition {spec.n}, got {zeta}")
    total = sum((_term(spec.n, k, zeta) for k in spec.sorted_lengths), Fraction(0))
    if total.denominator != 1:
        raise InternalConsistencyError(
            f"eigenvalue at zeta={zeta}, I={sorted(spec.lengths)} is not an integer: {total}"
        )
    return total.numerator


def full_spectrum(spec: ConnectionSpec) -> list[SpectrumEntry]:
    """One entry per partition of n, sorted by eigenvalue descending.

    Ties are broken by the canonical (lexicographically decreasing)
    partition order.  Multiplicities sum to n!.
    """
    entries = []
    for zeta in enumerate_partitions(spec.n):
        d = dimension(zeta)
        entries.append(SpectrumEntry(zeta, eigenvalue(zeta, spec), d, d * d))
    entries.sort(key=lambda e: -e.eigenvalue)
    if sum(e.multiplicity for e in entries) != math.factorial(spec.n):
        raise InternalConsistencyError(f"multiplicities do not sum to {spec.n}!")
    return entries


def component_count(spec: ConnectionSpec) -> int:
    """2 when every selected cycle length is odd (the set generates the
    alternating group), else 1."""
    return 1 if any(k % 2 == 0 for k in spec.lengths) else 2


def strictly_second_largest(spec: ConnectionSpec) -> SpectralSummary:
    """Largest eigenvalue strictly below the degree, with its attaining set,
    multiplicity, Aldous flag and Cheeger bounds."""
    spectrum = full_spectrum(spec)
    deg = degree(spec)
    if spectrum[0].eigenvalue != deg:
        raise InternalConsistencyError("top eigenvalue does not equal the degree")
    at_degree = [e for e in spectrum if e.eigenvalue == deg]
    if len(at_degree) != component_count(spec):
        raise InternalConsistencyError(
            "degree multiplicity does not match the component count"
        )
    below = [e for e in spectrum if e.eigenvalue < deg]
    if not below:
        raise InternalConsistencyError("every eigenvalue equals the degree")
    second = below[0].eigenvalue
    attaining = tuple(e.zeta for e in below if e.eigenvalue == second)
    mult = sum(e.multiplicity for e in below if e.eigenvalue == second)
    gap = deg - second
    with localcontext() as ctx:
        ctx.prec = 12
        upper = Decimal(2 * deg * gap).sqrt()
    return SpectralSummary(
        degree=deg,
        components=component_count(spec),
        second_value=second,
        attaining=attaining,
        second_multiplicity=mult,
        aldous=(spec.n - 1, 1) in attaining,
        cheeger_lower=Fraction(gap, 2),
        cheeger_upper=upper,
    )


def all_connection_specs(n: int) -> Iterator[ConnectionSpec]:
    """Every non-empty choice of cycle lengths, in binary counter order
    (bit b of the counter toggles length b + 2)."""
    for mask in range(1, 1 << (n - 1)):
        yield ConnectionSpec(
            n, frozenset(k for k in range(2, n + 1) if mask >> (k - 2) & 1)
        )
