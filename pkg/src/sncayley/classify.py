"""Case analysis of the strictly second largest eigenvalue, and checks of it.

For n >= 7 the attaining set of irreducible modules is governed by which
of the two longest cycle lengths (n-1 and n) the connection set uses and
by the parities involved.  `predict` routes a connection set to one of
twelve cases; `verify` recomputes the spectrum exactly and reports
whether the prediction holds.  Two exclusions that are conjectural for
odd n are evaluated separately and never raised as errors: a
counterexample is a reportable finding, not a failure of this library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .partitions import Partition
from .spectra import (
    ConnectionSpec,
    SpectralSummary,
    eigenvalue,
    strictly_second_largest,
)

CASE_TAGS = ("A1", "A2", "A3", "A4", "B1", "B2", "B3", "C1", "C2", "C3", "D1", "D2")


def _standard(n: int) -> Partition:
    return (n - 1, 1)


def _sign(n: int) -> Partition:
    return (1,) * n


def _hook2(n: int) -> Partition:
    return (2,) + (1,) * (n - 2)


def _n2_11(n: int) -> Partition:
    return (n - 2, 1, 1)


def _3_hook(n: int) -> Partition:
    return (3,) + (1,) * (n - 3)


def _n3_21(n: int) -> Partition:
    return (n - 3, 2, 1)


def _3_21(n: int) -> Partition:
    return (3, 2) + (1,) * (n - 5)


def _22_1(n: int) -> Partition:
    return (2, 2) + (1,) * (n - 4)


@dataclass(frozen=True)
class Prediction:
    """What the case analysis says about the strictly second largest eigenvalue.

    exact=True: the attaining set equals one of candidate_sets.
    exact=False: the attaining set is contained in candidate_sets[0].
    multiplicity is None when the case analysis leaves it open, and
    aldous is None when the answer depends on the individual set.
    """

    case_tag: str
    candidate_sets: tuple[frozenset[Partition], ...]
    exact: bool
    multiplicity: int | None
    aldous: bool | None


def predict(spec: ConnectionSpec) -> Prediction:
    """Route a connection set to its case.  Requires n >= 7."""
    n, lengths = spec.n, spec.lengths
    if n < 7:
        raise ValueError(f"the case analysis covers n >= 7 only, got n={n}")
    has_even = any(k % 2 == 0 for k in lengths)
    n_even = n % 2 == 0
    if n - 1 not in lengths and n not in lengths:
        if not has_even:
            return Prediction(
                "A1",
                (frozenset({_standard(n), _hook2(n)}),),
                exact=True,
                multiplicity=2 * (n - 1) ** 2,
                aldous=True,
            )
        if lengths == frozenset({2, 3}):
            return Prediction(
                "A2",
                (frozenset({_standard(n), _sign(n)}),),
                exact=True,
                multiplicity=(n - 1) ** 2 + 1,
                aldous=True,
            )
        if max(lengths) % 2 == 1:
            return Prediction(
                "A3", (frozenset({_sign(n)}),), exact=True, multiplicity=1, aldous=False
            )
        return Prediction(
            "A4",
            (frozenset({_standard(n)}),),
            exact=True,
            multiplicity=(n - 1) ** 2,
            aldous=True,
        )
    if n - 1 in lengths and n not in lengths:
        if n_even and has_even:
            return Prediction(
                "B1", (frozenset({_sign(n)}),), exact=True, multiplicity=1, aldous=False
            )
        if n_even:
            pair_a = frozenset({_standard(n), _hook2(n)})
            pair_b = frozenset({_n3_21(n), _3_21(n)})
            return Prediction(
                "B2",
                (pair_a, pair_b, pair_a | pair_b),
                exact=True,
                multiplicity=None,
                aldous=None,
            )
        return Prediction(
            "B3",
            (frozenset({_standard(n), _n3_21(n), _22_1(n), _hook2(n)}),),
            exact=False,
            multiplicity=None,
            aldous=None,
        )
    if n in lengths and n - 1 not in lengths:
        if not n_even and has_even:
            return Prediction(
                "C1", (frozenset({_sign(n)}),), exact=True, multiplicity=1, aldous=False
            )
        if not n_even:
            return Prediction(
                "C2",
                (frozenset({_n2_11(n), _3_hook(n)}),),
                exact=True,
                multiplicity=(n - 1) ** 2 * (n - 2) ** 2 // 2,
                aldous=False,
            )
        return Prediction(
            "C3",
            (frozenset({_n2_11(n), _hook2(n)}),),
            exact=False,
            multiplicity=None,
            aldous=False,
        )
    if n_even:
        return Prediction(
            "D1",
            (frozenset({_sign(n), _n2_11(n), _hook2(n)}),),
            exact=False,
            multiplicity=None,
            aldous=False,
        )
    return Prediction(
        "D2",
        (frozenset({_sign(n), _n2_11(n), _3_hook(n), _22_1(n)}),),
        exact=False,
        multiplicity=None,
        aldous=False,
    )


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of checking one connection set against its predicted case."""

    spec: ConnectionSpec
    prediction: Prediction
    summary: SpectralSummary
    attaining_ok: bool
    multiplicity_ok: bool | None
    aldous_ok: bool | None

    @property
    def passed(self) -> bool:
        return (
            self.attaining_ok
            and self.multiplicity_ok is not False
            and self.aldous_ok is not False
        )


def verify(spec: ConnectionSpec) -> VerificationRecord:
    """Compute the spectrum exactly and compare it with the predicted case."""
    prediction = predict(spec)
    summary = strictly_second_largest(spec)
    attaining = frozenset(summary.attaining)
    if prediction.exact:
        attaining_ok = any(attaining == cand for cand in prediction.candidate_sets)
    else:
        attaining_ok = attaining <= prediction.candidate_sets[0]
    multiplicity_ok = (
        None
        if prediction.multiplicity is None
        else summary.second_multiplicity == prediction.multiplicity
    )
    aldous_ok = (
        None if prediction.aldous is None else summary.aldous == prediction.aldous
    )
    return VerificationRecord(
        spec, prediction, summary, attaining_ok, multiplicity_ok, aldous_ok
    )


@dataclass(frozen=True)
class ConjectureCase:
    """One evaluation of a conjectured exclusion at a concrete connection set."""

    conjecture: str
    n: int
    lengths: tuple[int, ...]
    excluded_value: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.excluded_value < self.bound


def _subsets_including(n: int, forced: frozenset[int]) -> Iterator[frozenset[int]]:
    pool = tuple(k for k in range(2, n - 1) if k not in forced)
    for mask in range(1 << len(pool)):
        yield forced | {pool[i] for i in range(len(pool)) if mask >> i & 1}


def check_conjectures(n: int) -> list[ConjectureCase]:
    """Evaluate the two conjectured exclusions at every qualifying set.

    Both are claims about odd n >= 7; for even n there is nothing to
    check and the report is empty.  Violations are reported, not raised.
    """
    if n < 7:
        raise ValueError(f"conjectures are stated for n >= 7, got n={n}")
    if n % 2 == 0:
        return []
    cases = []
    for lengths in _subsets_including(n, frozenset({n - 1})):
        spec = ConnectionSpec(n, lengths)
        cases.append(
            ConjectureCase(
                "exclude-(n-3,2,1)",
                n,
                spec.sorted_lengths,
                eigenvalue(_n3_21(n), spec),
                max(eigenvalue(_standard(n), spec), eigenvalue(_22_1(n), spec)),
            )
        )
    for lengths in _subsets_including(n, frozenset({n - 1, n})):
        spec = ConnectionSpec(n, lengths)
        cases.append(
            ConjectureCase(
                "exclude-(3,1^(n-3))",
                n,
                spec.sorted_lengths,
                eigenvalue(_3_hook(n), spec),
                max(
                    eigenvalue(_sign(n), spec),
                    eigenvalue(_n2_11(n), spec),
                    eigenvalue(_22_1(n), spec),
                ),
            )
        )
    return cases


@dataclass(frozen=True)
class SingleCycleCase:
    """Check of the single-class graph Cay(S_n, C(n, {k})), 2 <= k <= n-2."""

    n: int
    k: int
    expected_second: int
    second_value: int
    standard_attains: bool

    @property
    def passed(self) -> bool:
        return self.second_value == self.expected_second and self.standard_attains


def single_cycle_standard_check(n: int) -> list[SingleCycleCase]:
    """For one class of k-cycles, 2 <= k <= n-2, the strictly second largest
    eigenvalue is (n-k-1)/(n-1) * binomial(n,k) * (k-1)! and the standard
    module (n-1, 1) attains it.  Requires n >= 4."""
    if n < 4:
        raise ValueError(f"needs n >= 4, got n={n}")
    out = []
    for k in range(2, n - 1):
        expected = Fraction(
            (n - k - 1) * math.comb(n, k) * math.factorial(k - 1), n - 1
        )
        if expected.denominator != 1:
            raise AssertionError(f"expected value not integral at n={n}, k={k}")
        summary = strictly_second_largest(ConnectionSpec(n, frozenset({k})))
        out.append(
            SingleCycleCase(
                n,
                k,
                expected.numerator,
                summary.second_value,
                _standard(n) in summary.attaining,
            )
        )
    return out
