"""
Exact irreducible characters of the symmetric group
====================================================

Builds the full character table of S_5 from the border strip recursion,
then shows a few identities the engine guarantees exactly.
"""

from fractions import Fraction

from sncayley import (
    character,
    closed_form_character,
    closed_form_dimension,
    conjugate,
    cycle_class,
    dimension,
    enumerate_partitions,
    normalized_character,
    sign_of_class,
)

n = 5
parts = enumerate_partitions(n)

# rows are modules, columns are conjugacy classes; both are labelled by
# partitions of n
print(f"character table of S_{n}")
width = max(len(str(g)) for g in parts) + 2
print(" " * width + "".join(f"{str(g):>{width}}" for g in parts))
for zeta in parts:
    row = "".join(f"{character(zeta, g):>{width}}" for g in parts)
    print(f"{str(zeta):<{width}}{row}")

# the first column is the dimension, and the hook length formula gives
# the same numbers without any recursion
print()
for zeta in parts:
    assert character(zeta, (1,) * n) == dimension(zeta)
print("column of the identity class == hook length dimensions")

# transposing the diagram multiplies the character by the sign of the class
for zeta in parts:
    for g in parts:
        assert character(conjugate(zeta), g) == sign_of_class(g) * character(zeta, g)
print("conjugate symmetry holds on all", len(parts) ** 2, "pairs")

# normalized characters are exact rationals in [-1, 1]
zeta, g = (4, 1), (2, 1, 1, 1)
value = normalized_character(zeta, g)
print(f"normalized character of {zeta} on {g} = {value}")
assert value == Fraction(1, 2)

# for diagrams close to a single row there are polynomial formulas in the
# cycle counts of the class; they match the recursion exactly
m = 9
shape = "n-3,2,1"
print(f"\nclosed form check for {shape} at n={m}:"
      f" dim {closed_form_dimension(shape, m)}")
for k in range(2, m + 1):
    g = cycle_class(m, k)
    assert closed_form_character(shape, g) == character((m - 3, 2, 1), g)
print(f"matches the recursion on every class (k,1^{{n-k}}), k=2..{m}")
