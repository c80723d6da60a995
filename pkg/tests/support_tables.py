"""Expected character supports on two nearly-full cycle classes.

These tables are assembled from closed-form dimension and value formulas,
independently of the border strip recursion, so the test suite can compare
the two.  Keys are the partitions with nonzero character on the class;
values are (dimension, character) pairs.  The second table carries signed
values, the first absolute values.
"""

from math import factorial


def support_on_n3_111(n):
    """Partitions with chi != 0 on the class (n-3, 1, 1, 1), as
    partition -> (dimension, |chi|).  Valid for n >= 8."""
    assert n >= 8
    rows = {
        (n,): (1, 1),
        (1,) * n: (1, 1),
        (n - 1, 1): (n - 1, 2),
        (2,) + (1,) * (n - 2): (n - 1, 2),
        (n - 2, 1, 1): ((n - 1) * (n - 2) // 2, 1),
        (3,) + (1,) * (n - 3): ((n - 1) * (n - 2) // 2, 1),
        (n - 3, 2, 1): (n * (n - 2) * (n - 4) // 3, 1),
        (3, 2) + (1,) * (n - 5): (n * (n - 2) * (n - 4) // 3, 1),
        (n - 3, 3): (n * (n - 1) * (n - 5) // 6, 2),
        (2, 2, 2) + (1,) * (n - 6): (n * (n - 1) * (n - 5) // 6, 2),
        (n - 4, 2, 2): (n * (n - 1) * (n - 4) * (n - 5) // 12, 1),
        (3, 3) + (1,) * (n - 6): (n * (n - 1) * (n - 4) * (n - 5) // 12, 1),
    }
    for m in range(5, n - 2):
        dim = factorial(n) // (
            3 * (n - 3) * (n - m + 1) * (n - m - 1) * (m - 1) * (m - 3)
            * factorial(m - 5) * factorial(n - m - 3)
        )
        rows[(n - m, 3, 2) + (1,) * (m - 5)] = (dim, 2)
    for m in range(4, n - 3):
        dim = factorial(n) // (
            6 * (n - 3) * (n - m) * (n - m - 1) * (n - m - 2) * m
            * factorial(m - 4) * factorial(n - m - 4)
        )
        rows[(n - m, 4) + (1,) * (m - 4)] = (dim, 1)
    for m in range(6, n - 1):
        dim = factorial(n) // (
            6 * (n - 3) * (n - m + 2) * (m - 2) * (m - 3) * (m - 4)
            * factorial(m - 6) * factorial(n - m - 2)
        )
        rows[(n - m, 2, 2, 2) + (1,) * (m - 6)] = (dim, 1)
    return rows


def support_on_n2_11(n):
    """Partitions with chi != 0 on the class (n-2, 1, 1), as
    partition -> (dimension, chi).  Valid for n >= 7."""
    assert n >= 7
    sgn = (-1) ** (n - 3)
    rows = {
        (n,): (1, 1),
        (1,) * n: (1, sgn),
        (n - 1, 1): (n - 1, 1),
        (2,) + (1,) * (n - 2): (n - 1, sgn),
        (n - 2, 2): (n * (n - 3) // 2, -1),
        (2, 2) + (1,) * (n - 4): (n * (n - 3) // 2, -sgn),
    }
    for m in range(3, n - 2):
        dim = factorial(n) // (
            2 * m * (n - 2) * (n - m) * (n - m - 1)
            * factorial(m - 3) * factorial(n - m - 3)
        )
        rows[(n - m, 3) + (1,) * (m - 3)] = (dim, (-1) ** (m - 2))
    for m in range(4, n - 1):
        dim = factorial(n) // (
            2 * (m - 1) * (m - 2) * (n - 2) * (n - m + 1)
            * factorial(m - 4) * factorial(n - m - 2)
        )
        rows[(n - m, 2, 2) + (1,) * (m - 4)] = (dim, (-1) ** (m - 2))
    return rows
