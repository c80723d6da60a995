"""Brute-force ground truth: literal Cayley graphs on all n! permutations.

Everything here is deliberately independent of the character machinery.
Vertices are permutations in one-line notation, indexed by lexicographic
rank; edges come from right multiplication by each generator; the
spectrum comes from a dense symmetric eigensolver.  Factorial growth
makes this unusable beyond small n, so graph construction refuses to run
above a size limit unless the caller raises it explicitly.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .partitions import Partition
from .spectra import ConnectionSpec, degree, full_spectrum

DEFAULT_LIMIT = 7


@dataclass
class PermutationGraph:
    n: int
    generators: list[tuple[int, ...]]
    adjacency: np.ndarray


def permutation_cycle_type(perm: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation given in one-line notation on 0..n-1."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        cycles.append(length)
    cycles.sort(reverse=True)
    return tuple(cycles)


def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise ValueError(
            f"brute force on {n}! = {math.factorial(n)} vertices refused; "
            f"limit is {limit}, pass a larger limit to override"
        )


def enumerate_connection_set(
    spec: ConnectionSpec, limit: int = DEFAULT_LIMIT
) -> list[tuple[int, ...]]:
    """All permutations whose cycle type is (k, 1^(n-k)) for a selected k."""
    _check_limit(spec.n, limit)
    wanted = {(k,) + (1,) * (spec.n - k) for k in spec.lengths}
    return [
        p
        for p in itertools.permutations(range(spec.n))
        if permutation_cycle_type(p) in wanted
    ]


def build_graph(spec: ConnectionSpec, limit: int = DEFAULT_LIMIT) -> PermutationGraph:
    """Dense adjacency matrix of the Cayley graph, vertices in lex order."""
    _check_limit(spec.n, limit)
    n = spec.n
    perms = list(itertools.permutations(range(n)))
    count = len(perms)
    table = np.array(perms, dtype=np.int64)
    # base n+1 keys are strictly increasing in lex order, so ranks come
    # from searchsorted against the keys themselves
    radix = (n + 1) ** np.arange(n - 1, -1, -1)
    keys = table @ radix
    generators = enumerate_connection_set(spec, limit)
    adjacency = np.zeros((count, count), dtype=np.uint8)
    rows = np.arange(count)
    for gen in generators:
        # right multiplication: (g . s)(x) = g(s(x))
        product = table[:, np.array(gen)]
        neighbor = np.searchsorted(keys, product @ radix)
        adjacency[rows, neighbor] = 1
    return PermutationGraph(n, generators, adjacency)


def numeric_spectrum(graph: PermutationGraph) -> np.ndarray:
    """All eigenvalues of the adjacency matrix, sorted descending."""
    values = np.linalg.eigvalsh(graph.adjacency.astype(np.float64))
    return values[::-1]


def component_count_bfs(graph: PermutationGraph) -> int:
    """Connected components by breadth-first search on the adjacency matrix."""
    count = graph.adjacency.shape[0]
    seen = np.zeros(count, dtype=bool)
    components = 0
    for start in range(count):
        if seen[start]:
            continue
        components += 1
        frontier = [start]
        seen[start] = True
        while frontier:
            nxt = []
            for v in frontier:
                for w in np.nonzero(graph.adjacency[v])[0]:
                    if not seen[w]:
                        seen[w] = True
                        nxt.append(int(w))
            frontier = nxt
    return components


@dataclass
class SpectrumComparison:
    n: int
    lengths: tuple[int, ...]
    degree: int
    tolerance: float
    max_deviation: float
    worst_index: int
    passed: bool


def compare_spectra(
    spec: ConnectionSpec,
    tolerance: float | None = None,
    limit: int = DEFAULT_LIMIT,
) -> SpectrumComparison:
    """Exact character-theoretic spectrum vs the dense numeric one.

    Both sides are laid out as full multisets of n! values sorted
    descending; the comparison reports the largest absolute deviation.
    Default tolerance is 1e-6 * max(1, degree).
    """
    graph = build_graph(spec, limit)
    numeric = numeric_spectrum(graph)
    exact = np.concatenate(
        [np.full(e.multiplicity, float(e.eigenvalue)) for e in full_spectrum(spec)]
    )
    deg = degree(spec)
    tol = 1e-6 * max(1, deg) if tolerance is None else tolerance
    deviation = np.abs(exact - numeric)
    worst = int(deviation.argmax())
    max_dev = float(deviation[worst])
    return SpectrumComparison(
        n=spec.n,
        lengths=spec.sorted_lengths,
        degree=deg,
        tolerance=tol,
        max_deviation=max_dev,
        worst_index=worst,
        passed=max_dev <= tol,
    )
