"""Exact irreducible characters of the symmetric group.

The workhorse is the Murnaghan-Nakayama rule: peel the largest cycle of
the class off the diagram as a border strip, with sign (-1)**height.
All arithmetic is exact (Python integers and fractions).

Closed forms for two nearly-full cycle classes and for eight families of
diagrams close to a single row are provided alongside.  They are
textbook identities, implemented independently of the recursion so the
two paths can cross-check each other.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache

from .partitions import (
    Partition,
    as_partition,
    border_strip_removals,
    dimension,
    part_counts,
)


def character(zeta: Partition, gamma: Partition) -> int:
    """Character of the irreducible module zeta on the class of cycle type gamma."""
    zeta = as_partition(zeta)
    gamma = as_partition(gamma)
    if sum(zeta) != sum(gamma):
        raise ValueError(f"zeta and gamma must partition the same n: {zeta} vs {gamma}")
    return _mn(zeta, gamma)


@cache
def _mn(zeta: Partition, gamma: Partition) -> int:
    if not gamma:
        return 1
    largest, rest = gamma[0], gamma[1:]
    return sum(
        (-1) ** height * _mn(mu, rest)
        for mu, height in border_strip_removals(zeta, largest)
    )


def normalized_character(zeta: Partition, gamma: Partition) -> Fraction:
    """character / dimension as an exact rational; always lies in [-1, 1]."""
    zeta = as_partition(zeta)
    return Fraction(character(zeta, gamma), dimension(zeta))


def _hook_height(zeta: Partition) -> int | None:
    """m if zeta is the hook (n-m, 1^m), else None."""
    if not zeta:
        return None
    if any(x != 1 for x in zeta[1:]):
        return None
    return len(zeta) - 1


def character_on_n_cycle(zeta: Partition) -> int:
    """Character on the class of n-cycles, n = |zeta| >= 1.

    Nonzero only on hooks: the hook (n-m, 1^m) gives (-1)**m.
    """
    n = sum(zeta)
    if n < 1:
        raise ValueError("zeta must partition n >= 1")
    m = _hook_height(zeta)
    if m is None:
        return 0
    return -1 if m % 2 else 1


def character_on_n_minus_1_cycle(zeta: Partition) -> int:
    """Character on the class (n-1, 1), n = |zeta| >= 3.

    Nonzero only for (n), (1^n) and the shapes (n-m, 2, 1^(m-2)) with
    2 <= m <= n-2, where the value is (-1)**(m-1).
    """
    n = sum(zeta)
    if n < 3:
        raise ValueError("zeta must partition n >= 3")
    if zeta == (n,):
        return 1
    if zeta == (1,) * n:
        return -1 if n % 2 else 1
    if len(zeta) >= 2 and zeta[1] == 2 and all(x == 1 for x in zeta[2:]):
        m = len(zeta)
        if 2 <= m <= n - 2:
            return 1 if m % 2 else -1
    return 0


# Families of diagrams with polynomial character formulas.  Each entry:
# shape key -> (parts builder, dimension polynomial, character polynomial).
# The character polynomial is evaluated on the part multiplicities
# c[i] = number of parts of gamma equal to i; every division is exact and
# is asserted to be so.

def _poly_n(c):
    return Fraction(1)


def _poly_n1_1(c):
    return Fraction(c[1] - 1)


def _poly_n2_2(c):
    return Fraction(c[1] * (c[1] - 3), 2) + c[2]


def _poly_n2_11(c):
    return Fraction((c[1] - 1) * (c[1] - 2), 2) - c[2]


def _poly_n3_3(c):
    return Fraction(c[1] * (c[1] - 1) * (c[1] - 5), 6) + (c[1] - 1) * c[2] + c[3]


def _poly_n3_21(c):
    return Fraction(c[1] * (c[1] - 2) * (c[1] - 4), 3) - c[3]


def _poly_n3_111(c):
    return Fraction((c[1] - 1) * (c[1] - 2) * (c[1] - 3), 6) - (c[1] - 1) * c[2] + c[3]


def _poly_n4_211(c):
    return (
        Fraction(c[1] * (c[1] - 2) * (c[1] - 3) * (c[1] - 5), 8)
        - Fraction((c[1] * c[1] - 3 * c[1] - 1) * c[2], 2)
        - Fraction(c[2] * c[2], 2)
        + c[4]
    )


_CLOSED_FORMS = {
    "n": (lambda n: (n,), lambda n: Fraction(1), _poly_n),
    "n-1,1": (lambda n: (n - 1, 1), lambda n: Fraction(n - 1), _poly_n1_1),
    "n-2,2": (lambda n: (n - 2, 2), lambda n: Fraction(n * (n - 3), 2), _poly_n2_2),
    "n-2,1^2": (
        lambda n: (n - 2, 1, 1),
        lambda n: Fraction((n - 1) * (n - 2), 2),
        _poly_n2_11,
    ),
    "n-3,3": (
        lambda n: (n - 3, 3),
        lambda n: Fraction(n * (n - 1) * (n - 5), 6),
        _poly_n3_3,
    ),
    "n-3,2,1": (
        lambda n: (n - 3, 2, 1),
        lambda n: Fraction(n * (n - 2) * (n - 4), 3),
        _poly_n3_21,
    ),
    "n-3,1^3": (
        lambda n: (n - 3, 1, 1, 1),
        lambda n: Fraction((n - 1) * (n - 2) * (n - 3), 6),
        _poly_n3_111,
    ),
    "n-4,2,1^2": (
        lambda n: (n - 4, 2, 1, 1),
        lambda n: Fraction(n * (n - 2) * (n - 3) * (n - 5), 8),
        _poly_n4_211,
    ),
}

CLOSED_FORM_SHAPES = tuple(_CLOSED_FORMS)


def closed_form_partition(shape: str, n: int) -> Partition:
    """Instantiate a closed-form shape key at a concrete n.

    Raises ValueError for unknown keys and for n too small for the shape
    to be a partition.
    """
    try:
        builder, _, _ = _CLOSED_FORMS[shape]
    except KeyError:
        raise ValueError(f"unknown shape {shape!r}; known: {CLOSED_FORM_SHAPES}") from None
    try:
        return as_partition(builder(n))
    except ValueError:
        raise ValueError(f"shape {shape!r} is not a partition at n={n}") from None


def closed_form_dimension(shape: str, n: int) -> int:
    """Dimension of a closed-form shape, from its polynomial in n."""
    closed_form_partition(shape, n)
    value = _CLOSED_FORMS[shape][1](n)
    if value.denominator != 1:
        raise AssertionError(f"dimension polynomial not integral for {shape} at n={n}")
    return value.numerator


def closed_form_character(shape: str, gamma: Partition) -> int:
    """Character of a closed-form shape on cycle type gamma, via its polynomial.

    Independent of the border strip recursion; used as a cross check.
    """
    n = sum(gamma)
    closed_form_partition(shape, n)
    value = _CLOSED_FORMS[shape][2](part_counts(gamma))
    if value.denominator != 1:
        raise AssertionError(f"character polynomial not integral for {shape} on {gamma}")
    return value.numerator
