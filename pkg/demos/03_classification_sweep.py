"""
Which modules attain the second largest eigenvalue
==================================================

For n >= 7 the attaining set is governed by whether the connection set
uses the two longest cycle lengths (n-1 and n) and by parities.  The
case analysis routes every connection set to one of twelve cases;
`verify` recomputes the spectrum exactly and confirms the routing.
"""

from collections import Counter

from sncayley import (
    ConnectionSpec,
    all_connection_specs,
    predict,
    strictly_second_largest,
    verify,
)

n = 8

# route every non-empty I through the case analysis and re-verify each
# prediction against the exact spectrum
tags = Counter()
for spec in all_connection_specs(n):
    record = verify(spec)
    assert record.passed, spec
    tags[record.prediction.case_tag] += 1
print(f"n={n}: all {sum(tags.values())} connection sets verified")
print("case tally:", dict(sorted(tags.items())))

# a case with everything pinned down: no long cycles, all lengths odd
spec = ConnectionSpec(n, frozenset({3, 5}))
pred = predict(spec)
print(f"\nI={{3,5}}: case {pred.case_tag}, attaining {sorted(pred.candidate_sets[0])},"
      f" multiplicity {pred.multiplicity}, aldous {pred.aldous}")

# with the (n-1)-cycles present and n even the outcome depends on the
# individual set: either the standard pair or a deeper pair of modules
for lengths in ((7,), (5, 7)):
    summary = strictly_second_largest(ConnectionSpec(n, frozenset(lengths)))
    print(f"I={set(lengths)}: second value {summary.second_value},"
          f" attained by {list(summary.attaining)}")
