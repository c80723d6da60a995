"""
Cross-checking the character formula against a literal graph
============================================================

The character-theoretic spectrum is only trustworthy if it matches the
eigenvalues of the actual adjacency matrix.  At n=5 the graph has 120
vertices, small enough to build densely and feed to a symmetric
eigensolver.
"""

import numpy as np

from sncayley import (
    ConnectionSpec,
    build_graph,
    compare_spectra,
    component_count,
    component_count_bfs,
    enumerate_connection_set,
    numeric_spectrum,
)

spec = ConnectionSpec(5, frozenset({2, 4}))

# the connection set is a union of conjugacy classes: all 2-cycles and
# all 4-cycles of S_5
generators = enumerate_connection_set(spec)
print(f"n=5, I={{2,4}}: {len(generators)} generators")

# vertices are the 120 permutations; edges come from right multiplication
graph = build_graph(spec)
print(f"adjacency matrix {graph.adjacency.shape}, regular of degree"
      f" {int(graph.adjacency.sum(axis=1)[0])}")

# the numeric spectrum should consist of near-integers
values = numeric_spectrum(graph)
print("largest numeric eigenvalues:", np.round(values[:5], 6))

# the library compares the full 120-value multisets and reports the
# worst deviation
report = compare_spectra(spec)
print(f"max deviation {report.max_deviation:.2e}"
      f" (tolerance {report.tolerance:.2e}) -> passed={report.passed}")
assert report.passed

# breadth-first search on the matrix agrees with the parity rule: even
# cycle lengths generate the whole group, odd-only sets do not
print("components: BFS", component_count_bfs(graph),
      "vs parity rule", component_count(spec))

# factorial growth makes brute force hopeless quickly, so construction
# refuses large n unless the limit is raised explicitly
try:
    build_graph(ConnectionSpec(9, frozenset({2})))
except ValueError as exc:
    print(f"refusal at n=9: {exc}")
