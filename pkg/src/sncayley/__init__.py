"""Exact spectra of normal Cayley graphs on the symmetric group whose
connection set is a union of full cycle classes."""

from .characters import (
    CLOSED_FORM_SHAPES,
    character,
    character_on_n_cycle,
    character_on_n_minus_1_cycle,
    closed_form_character,
    closed_form_dimension,
    closed_form_partition,
    normalized_character,
)
from .classify import (
    ConjectureCase,
    Prediction,
    SingleCycleCase,
    VerificationRecord,
    check_conjectures,
    predict,
    single_cycle_standard_check,
    verify,
)
from .oracle import (
    PermutationGraph,
    SpectrumComparison,
    build_graph,
    compare_spectra,
    component_count_bfs,
    enumerate_connection_set,
    numeric_spectrum,
    permutation_cycle_type,
)
from .partitions import (
    Partition,
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
from .spectra import (
    ConnectionSpec,
    InternalConsistencyError,
    SpectralSummary,
    SpectrumEntry,
    all_connection_specs,
    class_size,
    component_count,
    cycle_class,
    degree,
    eigenvalue,
    full_spectrum,
    strictly_second_largest,
)

__version__ = "0.1.0"
